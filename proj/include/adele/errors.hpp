#ifndef ADELE_ERRORS_HPP
#define ADELE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adele {

// Stable error names; the CLI renders err::name(code) on exit 1.
enum class errc {
    invalid_input,
    composite_modulus,
    non_squarefree,
    irreducibility_undecided,
    missing_field_discriminant,
    precision_unattainable,
    undetermined_prime,
    field_mismatch,
    matching_obstruction,
    signature_mismatch,
    out_of_matching_range,
    class_mismatch,
    search_exhausted,
    precondition_gcd,
    prime_mismatch,
    odd_quaternionic_rank,
    degree_mismatch,
    missing_zeta,
    degenerate_group,
    alpha_too_small,
    search_space_too_large,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace adele

#endif
