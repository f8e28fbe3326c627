#ifndef GEV_ERROR_HPP
#define GEV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gev {

enum class Errc {
    invalid_parameter,
    index_out_of_range,
    order_cap_exceeded,
    malformed_generator,
    subgroup_cap_exceeded,
    incomplete_table,
    n_cap_exceeded,
    arithmetic_width_exceeded,
    not_a_p_group,
    class_exceeds_limit,
    even_prime,
    not_nilpotent,
    identity_violation,
    certificate_failure,
    memory_budget_exceeded,
    syntax_error,
    unknown_family,
    bad_parameter,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::invalid_parameter:        return "invalid-parameter";
        case Errc::index_out_of_range:       return "index-out-of-range";
        case Errc::order_cap_exceeded:       return "order-cap-exceeded";
        case Errc::malformed_generator:      return "malformed-generator";
        case Errc::subgroup_cap_exceeded:    return "subgroup-count-cap-exceeded";
        case Errc::incomplete_table:         return "incomplete-table";
        case Errc::n_cap_exceeded:           return "n-cap-exceeded";
        case Errc::arithmetic_width_exceeded:return "arithmetic-width-exceeded";
        case Errc::not_a_p_group:            return "not-a-p-group";
        case Errc::class_exceeds_limit:      return "class-exceeds-limit";
        case Errc::even_prime:               return "even-prime";
        case Errc::not_nilpotent:            return "not-nilpotent";
        case Errc::identity_violation:       return "identity-violation";
        case Errc::certificate_failure:      return "certificate-failure";
        case Errc::memory_budget_exceeded:   return "memory-budget-exceeded";
        case Errc::syntax_error:             return "syntax-error";
        case Errc::unknown_family:           return "unknown-family";
        case Errc::bad_parameter:            return "bad-parameter";
    }
    return "unknown-error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace gev

#endif // GEV_ERROR_HPP
