#ifndef MUCHECK_GUARDRAIL_HH
#define MUCHECK_GUARDRAIL_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mucheck
{
    /// Thrown when a generator or a search would exceed its size limit. The message is a size report.
    class GuardrailExceeded : public std::runtime_error
    {
    public:
        GuardrailExceeded(std::string what, double size, double limit);

        [[nodiscard]] auto size() const -> double { return _size; }
        [[nodiscard]] auto limit() const -> double { return _limit; }

    private:
        double _size, _limit;
    };

    inline constexpr std::size_t default_node_limit = 1'000'000;
    inline constexpr double default_candidate_limit = 1e7;

    /// Formula-size limit for generators: MUCHECK_MAX_NODES if set to a positive integer, else 10^6.
    [[nodiscard]] auto node_limit() -> std::size_t;

    /// Throws GuardrailExceeded if nodes exceeds node_limit().
    auto check_node_budget(const std::string & what, double nodes) -> void;

    /// Throws GuardrailExceeded if candidates exceeds limit.
    auto check_candidate_budget(const std::string & what, double candidates, double limit = default_candidate_limit)
        -> void;
}

#endif
