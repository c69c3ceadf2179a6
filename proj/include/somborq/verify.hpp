#ifndef SOMBORQ_VERIFY_HPP
#define SOMBORQ_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "somborq/oracle.hpp"
#include "somborq/report.hpp"

namespace somborq {

/// Knobs for a verification run. Negative / zero values pick the claim's
/// documented default.
struct VerifyOptions {
  int n_lo = -1;                      // enumeration claims
  int n_hi = -1;
  int nmax = -1;                      // formula sweeps
  int nmax2 = -1;                     // secondary sweep bound where one exists
  long long samples = -1;             // randomized move contracts
  unsigned long long seed = 20240915ULL;
  int jobs = 0;                       // 0 = hardware concurrency
};

/// Memoises the exhaustive rankings so a battery enumerates each universe
/// once. Not thread safe; the enumerations parallelise internally.
class RankCache {
public:
  explicit RankCache(int jobs = 0) : jobs_(jobs) {}
  const RankResult& quasi(int n, int k);
  const RankResult& trees(int n);
  const RankResult& unicyclic(int n);
  int jobs() const { return jobs_; }

private:
  int jobs_ = 0;
  std::map<std::pair<int, int>, RankResult> quasi_;
  std::map<int, RankResult> trees_;
  std::map<int, RankResult> uni_;
};

/// Claim ids accepted by verify_claim / the CLI, with what each one checks.
std::vector<std::pair<std::string, std::string>> known_claims();

bool is_known_claim(const std::string& claim);

/// Run one claim. Throws std::invalid_argument for unknown claims or ranges
/// outside the module caps. Pass a cache to share enumerations across claims.
VerificationReport verify_claim(const std::string& claim, const VerifyOptions& opt,
                                RankCache* cache = nullptr);

/// The full battery ("all"): every claim at its default desk-scale range.
ReportDocument run_battery(const VerifyOptions& opt, const std::string& invocation);

}  // namespace somborq

#endif
