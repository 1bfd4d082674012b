#include <mucheck/guardrail.hh>

#include <cstdlib>
#include <sstream>

namespace mucheck
{
    namespace
    {
        auto report(const std::string & what, double size, double limit) -> std::string
        {
            std::ostringstream out;
            out.precision(15);
            out << what << ": size " << size << " exceeds the limit " << limit;
            return out.str();
        }
    }

    GuardrailExceeded::GuardrailExceeded(std::string what, double size, double limit) :
        std::runtime_error(report(what, size, limit)),
        _size(size),
        _limit(limit)
    {
    }

    auto node_limit() -> std::size_t
    {
        if (auto env = std::getenv("MUCHECK_MAX_NODES")) {
            char * end = nullptr;
            auto v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<std::size_t>(v);
        }
        return default_node_limit;
    }

    auto check_node_budget(const std::string & what, double nodes) -> void
    {
        auto limit = static_cast<double>(node_limit());
        if (nodes > limit)
            throw GuardrailExceeded(what + " (AST nodes)", nodes, limit);
    }

    auto check_candidate_budget(const std::string & what, double candidates, double limit) -> void
    {
        if (candidates > limit)
            throw GuardrailExceeded(what + " (multi-valued function candidates)", candidates, limit);
    }
}
