#include "nkverify/codazzi/tensors.hpp"

namespace nkv::codazzi {

template struct Affine<QSqrt3>;
template struct Affine<long double>;
template class CodazziSystem<QSqrt3>;
template class CodazziSystem<long double>;

}  // namespace nkv::codazzi
