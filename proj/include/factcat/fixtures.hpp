#pragma once

#include "factcat/fincat.hpp"

namespace factcat::fixtures {

/// Standard small categories used throughout the tests, the bundled
/// corpus files, and the demos. All are memoized; pointers are stable
/// for the lifetime of the process.

CatPtr empty_cat();       // no objects
CatPtr terminal();        // 1
CatPtr discrete2();       // two objects, identities only
CatPtr walking_arrow();   // A2: 0 -> 1
CatPtr walking_iso();     // I: x ≅ y
CatPtr bc2();             // one object, group Z/2
CatPtr bc3();             // one object, group Z/3
CatPtr pseudocircle();    // P4 poset: a,b < c,d
CatPtr chain3();          // poset 0 < 1 < 2
CatPtr parallel_pair();   // 0 ⇉ 1

/// Binary product with object names "(a,b)" and morphism names "(f,g)".
struct ProductResult {
    CatPtr cat;
    FinFunctor proj1;
    FinFunctor proj2;
};
ProductResult product(const CatPtr& a, const CatPtr& b);

}   // namespace factcat::fixtures
