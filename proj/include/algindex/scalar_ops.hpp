// Customization point for scalar types used inside generic matrix and
// polynomial code. Each scalar specializes ScalarOps; the free-function
// wrappers below are what templates call, so specializations only need to be
// visible at instantiation time (this also covers types from foreign
// namespaces like GMP's mpq_class, where argument-dependent lookup would not
// find plain overloads).
#pragma once

#include <string>

namespace algindex {

template <typename T>
struct ScalarOps;  // is_zero, zero_like, one_like, str; exact_div where meaningful

template <typename T>
bool is_zero(const T& x) {
    return ScalarOps<T>::is_zero(x);
}
template <typename T>
T zero_like(const T& x) {
    return ScalarOps<T>::zero_like(x);
}
template <typename T>
T one_like(const T& x) {
    return ScalarOps<T>::one_like(x);
}
template <typename T>
std::string to_string(const T& x) {
    return ScalarOps<T>::str(x);
}
template <typename T>
T exact_div(const T& a, const T& b) {
    return ScalarOps<T>::exact_div(a, b);
}

}  // namespace algindex
