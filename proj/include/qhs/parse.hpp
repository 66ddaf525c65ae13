#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qhs/disk.hpp"
#include "qhs/suq2.hpp"

namespace qhs {

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Shared grammar over both contexts:
//   expr   := term (('+' | '-') term)*
//   term   := factor (['*'] factor)*        juxtaposition multiplies
//   factor := primary ('^' ['-'] INTEGER)?
//   primary:= INTEGER ['/' INTEGER] | 'i' | 'q' | generator | '(' expr ')'
// Generators: a, a*, g, g* in the su context; y, z, z* in the disk
// context. A '*' immediately following a generator letter is the
// involution (maximal munch), so `a*a` means (a*) a; exponents are
// positive on generators and arbitrary integers on q and on invertible
// single-term scalars. The result is returned in normal form.
SUq2Element parse_su(std::string_view text);
DiskElement parse_disk(std::string_view text);

// Scalar sub-grammar alone (no generators).
QScalar parse_scalar(std::string_view text);

} // namespace qhs
