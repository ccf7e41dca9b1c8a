/* Verification suites: named checks over the preset ring, machine-readable
 * reports, and a workspace that caches the expensive shared artifacts. */
#ifndef TATELAB_REPORT_HPP
#define TATELAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tatelab/homalg.hpp"
#include "tatelab/invsys.hpp"

namespace tatelab {

using Json = nlohmann::ordered_json;

struct CheckResult {
    std::string id;
    std::string status;  // pass | fail | skipped
    Json expected;
    Json actual;
    std::string paper_anchor;  // the mathematical claim being checked
    long runtime_ms = 0;
};

struct Report {
    std::string version;
    std::string field;
    std::vector<CheckResult> checks;

    int count(const std::string& status) const;
    bool all_pass() const { return count("fail") == 0; }
    Json to_json() const;
};

void emit_json(const Report& rep, const std::string& path);

struct SuiteOptions {
    FieldConfig cfg;
    int neg = 9;        // negative extent of the explicit complete resolution
    int pos = 6;        // positive extent (rank growth makes larger values costly)
    int depth = 8;      // resolution depth for rank-2-coefficient modules
    int depth_k = 4;    // resolution depth for k and other fast-growing modules
    std::vector<int> qs = {1, 2, 3};
    int seeds = 20;
    unsigned long long seed0 = 1;
    bool growth = true;  // include the expensive rank-growth checks
};

/* Caches the algebra, the complete resolution, presets and resolutions;
 * everything is built lazily and kept for the lifetime of the workspace. */
class Workspace {
public:
    explicit Workspace(const SuiteOptions& opt) : opt_(opt) {}

    const SuiteOptions& options() const { return opt_; }
    const GradedAlgebra& R();
    const Complex& C();  // indices -neg .. pos
    const Complex& T();  // dualize(C), the complete resolution used for Tate checks
    const FpModule& mod(const std::string& name, int q = 1);
    const Resolution& res(const std::string& name, int depth, int q = 1);
    /* Graded kernel of the last positive differential of C, shared by the
     * rank-growth and top-index Tor computations. */
    const std::map<int, std::vector<SVec>>& pos_kernel();

private:
    SuiteOptions opt_;
    std::optional<GradedAlgebra> R_;
    std::optional<Complex> C_, T_;
    std::map<std::string, FpModule> mods_;
    std::map<std::string, Resolution> ress_;
    std::optional<std::map<int, std::vector<SVec>>> pos_kernel_;
};

/* suite in {ring, invsys, complex, homology, auslander, all}. */
Report run_suite(const std::string& suite, Workspace& ws);
Report run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace tatelab

#endif
