#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toeplab/bounds.hpp"
#include "toeplab/errors.hpp"
#include "toeplab_cli/config.hpp"

namespace toeplab::cli {

using Json = nlohmann::ordered_json;

/// Raised when --strict is set and the map fails the univalence check.
class UnivalenceRejected : public Error {
public:
    using Error::Error;
};

/// Common envelope: {tool, version, report, config, result}.
Json envelope(const std::string& report, const RunConfig& config, Json result);

Json commutator_report(const RunConfig& config);
Json bergman_report(const RunConfig& config);
Json spectral_report(const RunConfig& config);
Json polydisc_report(const RunConfig& config);
Json sweep_report(const RunConfig& config, const std::vector<SweepRow>& rows);

Json complex_json(Complex z);
Json inequality_json(const InequalityCheck& check);

/// CSV with header eps,khavinson_lower,commutator_norm,putnam_upper,area,perimeter
/// and %.17g fields.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Line chart of the three sweep curves: axes, three polylines and a legend.
std::string sweep_svg(const std::vector<SweepRow>& rows);

/// Serialized report text, newline terminated.
std::string dump(const Json& report);

}  // namespace toeplab::cli
