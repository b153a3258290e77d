#pragma once

#include <stdexcept>
#include <string>

namespace csl {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Two elements live in different quadratic fields (distinct radicands).
class field_mismatch : public error {
public:
    using error::error;
};

class division_by_zero : public error {
public:
    using error::error;
};

// Radicand is not a square-free integer >= 2.
class invalid_radicand : public error {
public:
    using error::error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class singular_matrix : public error {
public:
    using error::error;
};

class rank_deficient : public error {
public:
    using error::error;
};

class zero_vector : public error {
public:
    using error::error;
};

// Operation needs a rational matrix but found a surd entry.
class irrational_entries : public error {
public:
    using error::error;
};

class irrational_coordinates : public error {
public:
    using error::error;
};

class invalid_clearing_multiple : public error {
public:
    using error::error;
};

class not_reflective_lattice : public error {
public:
    using error::error;
};

class not_coincidence_isometry : public error {
public:
    using error::error;
};

class invalid_params : public error {
public:
    using error::error;
};

// Planar spot check asked for a lattice whose b is outside the scalar field.
class unrepresentable_b : public error {
public:
    using error::error;
};

// Text/document parse failure; `offset` is the byte position in the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace csl
