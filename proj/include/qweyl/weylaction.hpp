#pragma once

// The operators Theta_i: Pi -> Pi, mapping the completion of w to that of
// w s_i, together with the involution and braid verification drivers.

#include "qweyl/qdiff.hpp"
#include "qweyl/series.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

namespace qweyl {

/// Y_{node,k}^{sign}.
struct Generator {
    int node = 0;
    int k = 0;
    int sign = 1;

    Mono mono() const { return Mono::y(node, k, sign); }
    std::string toString() const;
};

/// All Y_{j,0}^{+-1}.
std::vector<Generator> defaultGenerators(int rank);

struct CheckEntry {
    std::string relation;
    std::string type;
    std::string w;
    std::string generator;
    int order = 0;
    bool pass = false;
    std::string firstMismatch;

    Json toJson() const;
};

struct Report {
    std::vector<CheckEntry> entries;

    bool allPassed() const;
    std::size_t failures() const;
    void append(const Report& other);
    void add(CheckEntry e) { entries.push_back(std::move(e)); }
    Json toJson() const;
};

CheckEntry makeEntry(std::string relation, const CartanData& cartan, const WeylElt& w, std::string generator,
                     const Comparison& cmp);

/// Theta engine at a fixed truncation order.  Sigma values, ratio powers and
/// iterated sigmas are cached; the caches take concurrent readers and
/// exclusive writers.
class ThetaContext {
public:
    ThetaContext(CartanPtr cartan, int order);

    const CartanPtr& cartan() const { return cartan_; }
    int order() const { return order_; }

    /// Sigma^w_{i,k}; checked against its equation when first computed.
    PSeries sigma(int i, int k, const WeylElt& w);

    PSeries thetaOnGenerator(int i, const Generator& g, const WeylElt& w);
    /// Image of a series of component w in component w s_i, same order.
    PSeries thetaOnSeries(int i, const PSeries& x);
    SeriesSum thetaOnSum(int i, const SeriesSum& x);
    PiElt thetaOnPi(int i, const PiElt& x);
    /// Theta_{word[0]} ... Theta_{word[last]} (x): the last letter acts first.
    SeriesSum thetaWord(const std::vector<int>& word, const SeriesSum& x);

    /// Iterated sigmas for the pair (i, j).  Explicit: the equations of qdiff
    /// (ij, ji; iji, jij for B2).  Transported: names defined through Theta
    /// (iji, jij for B2; iji, jiji, ijiji, jij, ijij, jijij for G2), solved
    /// from the equation carried over by Theta.  Theta: the defining formula
    /// applied directly.  Default prefers Explicit.
    enum class Source { Default, Explicit, Transported, Theta };
    PSeries iteratedSigma(const std::string& name, int i, int j, int k, const WeylElt& w,
                          Source source = Source::Default);
    /// The equation satisfied by a Theta-defined sigma, transported from the
    /// equation of its predecessor.
    QDiffEq transportedEquation(const std::string& name, int i, int j, const WeylElt& w);
    bool hasTransport(const std::string& name, int i, int j) const { return transportStep(name, i, j).has_value(); }

private:
    struct Step {
        std::string source;
        int node;                  // 0 for i, 1 for j
        std::vector<int> shifts;  // P = prod Sigma_{node, shift}
    };
    std::optional<Step> transportStep(const std::string& name, int i, int j) const;
    PSeries transportFactor(const Step& step, int i, int j, const WeylElt& w);

    const PSeries& ratioPower(int i, const WeylElt& target, int u);

    CartanPtr cartan_;
    int order_;

    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, std::vector<long>>, PSeries> sigmas_;
    std::map<std::tuple<int, std::vector<long>, int>, PSeries> ratioPowers_;
    std::map<std::tuple<std::string, int, int, std::vector<long>, int>, PSeries> iterated_;
};

/// Theta_i^2 = Id on the given generators starting from component w.
Report verifyInvolution(ThetaContext& ctx, int i, const WeylElt& w, const std::vector<Generator>& gens);
Report verifyInvolutionAll(ThetaContext& ctx);

/// The braid relation of the pair (i, j) on Y_{i,0}, Y_{j,0} from every
/// component.
Report verifyBraidRelation(ThetaContext& ctx, int i, int j);
/// Fixed-point identities of the iterated sigmas for the pair (i, j) in
/// every component, and the end points of the rank-2 diagrams.
Report verifyDiagramIdentities(ThetaContext& ctx, int i, int j);
/// Both of the above for a rank-2 Cartan matrix (nodes 1 and 2).
Report verifyBraid(ThetaContext& ctx);

/// Theta_i(x) == y as elements of component w s_i, where x lives in w.
Comparison compareTheta(ThetaContext& ctx, int i, const SeriesSum& x, const SeriesSum& expected);

}  // namespace qweyl
