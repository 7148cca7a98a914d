#include "sea/inequality.hpp"

namespace sea {

std::string_view status_name(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::Holds:
        return "holds";
    case VerdictStatus::Fails:
        return "fails";
    case VerdictStatus::HypothesesNotMet:
        break;
    }
    return "hypotheses-not-met";
}

CounterexampleReplay replay_counterexample()
{
    return replay_counterexample(e0::Carrier(e0::kDefaultWindow));
}

bool verify_theorem1()
{
    return replay_counterexample().reproduced;
}

} // namespace sea
