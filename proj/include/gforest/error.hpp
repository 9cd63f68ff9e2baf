#pragma once

#include <stdexcept>
#include <string>

namespace gforest {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// power series
class non_unit_constant_term : public error {
public:
    using error::error;
};
class nonzero_constant_term : public error {
public:
    using error::error;
};
class not_invertible : public error {
public:
    using error::error;
};
class order_mismatch : public error {
public:
    using error::error;
};
class order_exceeded : public error {
public:
    using error::error;
};

// transforms / genfun
class invalid_weight : public error {
public:
    using error::error;
};
class integrality_violation : public error {
public:
    using error::error;
};
class relation_parse_error : public error {
public:
    using error::error;
};

// oracle / permutations
class budget_exceeded : public error {
public:
    using error::error;
};
class invalid_move : public error {
public:
    using error::error;
};
class size_too_small : public error {
public:
    using error::error;
};

// cli
class config_error : public error {
public:
    using error::error;
};

} // namespace gforest
