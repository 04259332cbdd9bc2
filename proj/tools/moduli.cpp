#include "moduli/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace moduli::cli;

namespace {

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!(out << text)) {
        std::cerr << json{{"error", "cannot write " + path}, {"kind", "io"}}.dump(2) << "\n";
        return kUsageError;
    }
    return kOk;
}

void add_type(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--g", c.g, "genus")->required();
    cmd->add_option("--n", c.n, "number of boundary components")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial moduli spaces of curves: ribbon graphs, volumes and intersection numbers"};
    app.require_subcommand(1);
    RunConfig c;
    app.add_option("--format", c.format, "json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();
    app.add_option("--output", c.output, "write to this file instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "ribbon graphs of type (g, n) with |Aut|");
    add_type(enumerate, c);
    enumerate->add_option("--degrees", c.degrees, "vertex degrees, e.g. 5,3 (default: trivalent)")->delimiter(',');

    auto* volume = app.add_subcommand("volume", "Kontsevich volume polynomial W_{g,n}");
    add_type(volume, c);

    auto* psi = app.add_subcommand("psi", "psi-class intersection numbers");
    add_type(psi, c);

    auto* kcf = app.add_subcommand("verify-kcf", "check Kontsevich's combinatorial formula at random points");
    add_type(kcf, c);
    kcf->add_option("--trials", c.trials, "number of evaluation points")->capture_default_str();
    kcf->add_option("--seed", c.seed, "RNG seed")->required();

    auto* identities = app.add_subcommand("identities", "matrix identities on trivalent graphs");
    add_type(identities, c);

    auto* witten = app.add_subcommand("witten12", "Witten cycle W_1 in M_{1,2}");
    witten->add_option("--charts", c.charts, "directory of chart JSON files");

    auto* angle = app.add_subcommand("angle", "crossing angle of two chords of the regular ideal d-gon");
    angle->add_option("--d", c.d, "polygon degree")->required();
    angle->add_option("--chord1", c.chord1, "endpoints, e.g. 0,2")->required()->delimiter(',');
    angle->add_option("--chord2", c.chord2, "endpoints, e.g. 1,3")->required()->delimiter(',');

    for (auto* s : {enumerate, volume, psi, kcf, identities, witten, angle})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", e.what()}, {"kind", "usage"}}.dump(2) << "\n";
        return kUsageError;
    }
    c.command = app.get_subcommands().front()->get_name();

    CommandResult result = run(c);
    std::string text;
    try {
        text = render(result, c.format);
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}, {"kind", "usage"}}.dump(2) << "\n";
        return kUsageError;
    }
    int io = emit(text, c.output);
    return io != kOk ? io : result.exit_code;
}
