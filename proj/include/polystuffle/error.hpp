#ifndef POLYSTUFFLE_ERROR_HPP
#define POLYSTUFFLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polystuffle
{

enum class Errc {
    invalid_index,
    not_in_image,
    alphabet_mismatch,
    invalid_argument,
    nonzero_constant,
    not_representable,
    domain,
    precision_unattainable,
    parse,
    type,
};

// Stable machine-readable name, used in CLI error objects.
const char *errc_name(Errc code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &message) : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace polystuffle

#endif
