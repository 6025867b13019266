#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner.  Each suite returns data rows and check entries; documents carry
// the schema tag "qweyl-report/1".

#include "qweyl/weylaction.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qweyl {

inline constexpr const char* kReportSchema = "qweyl-report/1";

struct RunConfig {
    CartanPtr cartan;
    int order = 6;
    /// Empty means every component.
    std::vector<WeylElt> components;
    std::optional<int> node;  // 0-based; empty means every node
    int base = 0;
    std::string expr;
    std::string name;
    std::uint64_t seed = 1;
    int samples = 100;
    int jobs = 1;

    std::vector<WeylElt> selectedComponents() const;
    std::vector<int> selectedNodes() const;
    /// Everything that determines the output; the job count does not.
    Json toJson() const;
};

struct SuiteResult {
    Json results = Json::array();
    Report checks;

    void append(SuiteResult other);
};

using Suite = std::function<SuiteResult(const RunConfig&)>;

/// Commands in the order they are listed by the tool.
const std::vector<std::pair<std::string, Suite>>& suites();
const Suite& findSuite(const std::string& command);

SuiteResult runSigma(const RunConfig& cfg);
SuiteResult runIteratedSigma(const RunConfig& cfg);
SuiteResult runTheta(const RunConfig& cfg);
SuiteResult runInvolution(const RunConfig& cfg);
SuiteResult runBraid(const RunConfig& cfg);
SuiteResult runFixedElements(const RunConfig& cfg);
SuiteResult runScreen(const RunConfig& cfg);
SuiteResult runKernel(const RunConfig& cfg);
SuiteResult runDeformCheck(const RunConfig& cfg);
SuiteResult runClassical(const RunConfig& cfg);
SuiteResult runEquivariance(const RunConfig& cfg);
SuiteResult runChari(const RunConfig& cfg);
SuiteResult runLambda(const RunConfig& cfg);

/// Sigma identities: 1 - Sigma, Theta(A^{-1}), Theta_i(Sigma_j) and, for A2,
/// the product relation between Sigma_ij and Sigma_ji.
SuiteResult runSigmaIdentities(const RunConfig& cfg);

/// Sigma^+ or Sigma^- summed from its defining product formula.
PSeries sigmaBySummation(const CartanPtr& cartan, int i, int k, const WeylElt& w, int N);

Json reportDocument(const std::string& command, const RunConfig& cfg, const SuiteResult& r);
std::string renderText(const Json& document);

/// Runs f(0..n-1) on up to `jobs` threads and returns the results in index order.
template <typename T>
std::vector<T> parallelMap(std::size_t n, int jobs, const std::function<T(std::size_t)>& f) {
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < n; idx = next++) {
            try {
                slots[idx].emplace(f(idx));
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    const auto count = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(count, n); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        if (errors[idx]) std::rethrow_exception(errors[idx]);
        out.push_back(std::move(*slots[idx]));
    }
    return out;
}

}  // namespace qweyl
