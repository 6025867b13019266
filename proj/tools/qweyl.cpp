#include "qweyl/error.hpp"
#include "qweyl/suites.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qweyl;

namespace {

struct Options {
    std::string type;
    std::string cartanFile;
    int order = 6;
    std::string w = "all";
    int node = 0;
    int base = 0;
    std::string expr;
    std::string name;
    std::string format = "text";
    std::uint64_t seed = 1;
    int samples = 100;
    int jobs = 1;
};

CartanPtr loadCartan(const Options& o) {
    if (o.type.empty() == o.cartanFile.empty()) throw Error("give exactly one of --type and --cartan-file");
    if (!o.type.empty()) return std::make_shared<const CartanData>(CartanData::named(o.type));
    std::ifstream in(o.cartanFile);
    if (!in) throw Error(fmt::format("cannot open {}", o.cartanFile));
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(fmt::format("{}: {}", o.cartanFile, e.what()));
    }
    const Json& rows = j.is_object() ? j.at("cartan") : j;
    const auto n = static_cast<Eigen::Index>(rows.size());
    IntMatrix c(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (rows[r].size() != rows.size()) throw CartanError("Cartan matrix must be square");
        for (Eigen::Index s = 0; s < n; ++s) c(r, s) = rows[r][s].get<long>();
    }
    std::string name = j.is_object() && j.contains("name") ? j["name"].get<std::string>() : "";
    return std::make_shared<const CartanData>(CartanData::fromMatrix(c, name));
}

std::vector<WeylElt> parseComponents(const CartanData& cartan, const std::string& text) {
    if (text == "all") return {};
    std::vector<WeylElt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parseWeylWord(cartan, item));
    return out;
}

RunConfig buildConfig(const Options& o) {
    RunConfig cfg;
    cfg.cartan = loadCartan(o);
    if (o.order < 0) throw Error("--order must be non-negative");
    if (o.jobs < 1) throw Error("--jobs must be positive");
    if (o.samples < 0) throw Error("--samples must be non-negative");
    cfg.order = o.order;
    cfg.components = parseComponents(*cfg.cartan, o.w);
    if (o.node != 0) {
        cfg.cartan->checkNode(o.node - 1);
        cfg.node = o.node - 1;
    }
    cfg.base = o.base;
    cfg.expr = o.expr;
    cfg.name = o.name;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.jobs = o.jobs;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks the Weyl group action on completed q-character rings"};
    app.require_subcommand(1);
    Options o;
    for (const auto& [command, suite] : suites()) {
        auto* sub = app.add_subcommand(command);
        sub->add_option("--type", o.type, "Named Cartan type such as A2, B2, G2, A1xA1");
        sub->add_option("--cartan-file", o.cartanFile, "JSON file holding a Cartan matrix");
        sub->add_option("--order", o.order, "Truncation order");
        sub->add_option("--w", o.w, "Comma-separated reduced words, or 'all'");
        sub->add_option("--node", o.node, "Node index, 1-based");
        sub->add_option("--base", o.base, "Spectral shift k of the base generator");
        sub->add_option("--expr", o.expr, "Laurent polynomial in Y[i,k]");
        sub->add_option("--name", o.name, "Iterated sigma name such as ij or jij");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--samples", o.samples, "Number of random samples");
        sub->add_option("--jobs", o.jobs, "Worker threads");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    std::string output;
    bool pass = false;
    try {
        RunConfig cfg = buildConfig(o);
        SuiteResult r = findSuite(command)(cfg);
        Json doc = reportDocument(command, cfg, r);
        output = o.format == "json" ? doc.dump(2) + "\n" : renderText(doc);
        pass = r.checks.failures() == 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << output;
    return pass ? 0 : 1;
}
