#pragma once

#include "degenkit/families.hpp"
#include "degenkit/report.hpp"
#include "degenkit/series.hpp"
#include "degenkit/stirling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace degenkit {

/// Testing hook: add an integer constant to one recurrence-triangle entry
/// before the families are built, so downstream checks must notice.
struct TrianglePerturbation {
    int n = 0;
    int k = 0;
    std::int64_t delta = 0;
};

struct SuiteConfig {
    int n_max = 10;
    int p_max = 8;
    int r_max = 4;
    int order = kDefaultOrder;
    /// Empty = compare with L fully symbolic; otherwise compare after
    /// substituting the sampled value (redundant sanity layer).
    std::optional<Rational> lambda_value;
    /// Family names to run. Absent = every family; an empty list runs
    /// nothing and succeeds vacuously.
    std::optional<std::vector<std::string>> selection;
    std::optional<TrianglePerturbation> perturb_second_kind;
};

/// Immutable shared inputs for the checks: both second-kind triangle
/// constructions, the first-kind triangle, the polynomial families built
/// from the recurrence triangle, and two cached series.
class VerifyContext {
  public:
    explicit VerifyContext(SuiteConfig config);

    const SuiteConfig& config() const { return config_; }
    int order() const { return config_.order; }
    int family_n_max() const { return family_n_max_; }
    const std::optional<Rational>& lambda_sample() const { return config_.lambda_value; }

    const StirlingTriangle& second_recurrence() const { return second_recurrence_; }
    const StirlingTriangle& second_egf() const { return second_egf_; }
    const StirlingTriangle& first_egf() const { return first_egf_; }
    const PolyFamily& bell() const { return bell_; }
    const PolyFamily& fubini() const { return fubini_; }
    /// e^x over Q[L], order N.
    const TruncatedSeries<LambdaPoly>& exp_x() const { return exp_x_; }
    /// 1/(1-x), order N.
    const TruncatedSeries<LambdaPoly>& geometric() const { return geometric_; }

  private:
    SuiteConfig config_;
    int family_n_max_;
    StirlingTriangle second_recurrence_;
    StirlingTriangle second_egf_;
    StirlingTriangle first_egf_;
    PolyFamily bell_;
    PolyFamily fubini_;
    TruncatedSeries<LambdaPoly> exp_x_;
    TruncatedSeries<LambdaPoly> geometric_;
};

/// Throws std::invalid_argument when ranges or selection names are bad.
void validate_config(const SuiteConfig& config);

// One check instance each; every check compares objects built through
// disjoint code paths and reports the first differing coefficient.
VerdictReport check_theorem_1(const VerifyContext& ctx, int n);
VerdictReport check_theorem_2(const VerifyContext& ctx, int n);
VerdictReport check_proposition_3(const VerifyContext& ctx, int p);
VerdictReport check_theorem_4(const VerifyContext& ctx, int p);
VerdictReport check_theorem_5(const VerifyContext& ctx, int p);
VerdictReport check_theorem_6(const VerifyContext& ctx, int p);
VerdictReport check_theorem_7(const VerifyContext& ctx, int p);
VerdictReport check_theorem_8(const VerifyContext& ctx, int p, int statement);
VerdictReport check_corollary_9(const VerifyContext& ctx, int p);
VerdictReport check_theorem_10(const VerifyContext& ctx, int r, int n);
VerdictReport check_theorem_11(const VerifyContext& ctx, int p, int r);
VerdictReport check_theorem_12(const VerifyContext& ctx, int p, int r);
VerdictReport check_eq_33(const VerifyContext& ctx);
VerdictReport check_eq_39(const VerifyContext& ctx, int p);
VerdictReport check_eq_5(const VerifyContext& ctx);
VerdictReport check_eq_6(const VerifyContext& ctx);
VerdictReport check_stirling_inversion(const VerifyContext& ctx);
VerdictReport check_stirling_cross(const VerifyContext& ctx);
VerdictReport check_bell_dobinski(const VerifyContext& ctx, int n);
VerdictReport check_bell_egf_cross(const VerifyContext& ctx);
VerdictReport check_fubini_ogf_cross(const VerifyContext& ctx);
VerdictReport check_eq_7_log_exp(const VerifyContext& ctx);
VerdictReport check_eq_8_li1(const VerifyContext& ctx);

enum class FamilyTier { paper, definitional };

struct FamilyInfo {
    std::string name;
    FamilyTier tier;
};

/// All selectable families in deterministic run order: the fourteen paper
/// identities, then the definitional cross-checks.
const std::vector<FamilyInfo>& suite_families();
bool is_family_name(const std::string& name);

struct SuiteResult {
    SuiteConfig config;
    std::vector<VerdictReport> reports;
    bool all_passed = false;
};

/// Runs every selected family over the configured parameter grid, in the
/// fixed family order with ascending parameters.
SuiteResult run_suite(const SuiteConfig& config);

nlohmann::ordered_json suite_to_json(const SuiteResult& result);
std::string suite_to_text(const SuiteResult& result);
std::string suite_to_csv(const SuiteResult& result);

}  // namespace degenkit
