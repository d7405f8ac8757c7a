#pragma once

#include <stdexcept>
#include <string>

namespace qtau {

// Bad arguments: unknown Lie type, invalid rank, malformed spec files, ...
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit was exceeded (Weyl group size, enumeration
// size, braid tensor dimension).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An identity the implementation relies on failed to hold exactly.  Thrown
// by internal consistency assertions (exact divisions, completed squares);
// a throw here signals a bug, not bad user input.
class check_error : public std::runtime_error {
public:
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qtau
