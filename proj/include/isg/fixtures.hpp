#ifndef ISG_FIXTURES_HPP
#define ISG_FIXTURES_HPP

#include "isg/semigroup.hpp"

namespace isg::fixtures {

// {1, e}: the identity and the empty map in degree 1.  The smallest
// semigroup whose idempotent lattice is a two element chain.
ISG chain2();

// The two element group as total permutations of degree 2.
ISG z2();

// The symmetric inverse monoid on {1..n}: all partial injections.
ISG sym_inv(int n);

}  // namespace isg::fixtures

#endif
