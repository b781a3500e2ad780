#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "antsort/cli.hpp"

using namespace antsort;

namespace {

// sort/enumerate/check/layers/dijkstra read an instance file; bench does not
struct Args {
    std::string file;
    std::string mode = "plain";
    RunConfig cfg;
};

void add_common(CLI::App* cmd, Args& a, bool takes_file) {
    if (takes_file)
        cmd->add_option("file", a.file, "instance file")->required();
    cmd->add_option("--seed", a.cfg.seed, "seed for sampled orders and trials");
    cmd->add_option("--bf-limit", a.cfg.bf_limit,
                    "largest n the brute-force passes will touch");
    cmd->add_option("--out", a.cfg.out_path, "also write the report to this file");
    cmd->add_flag("--validate,!--no-validate", a.cfg.validate,
                  "runtime contract checks on the availability backend");
    cmd->add_flag("--transcript", a.cfg.transcript, "include queue snapshots");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sorts a hidden total order under availability constraints"};
    app.require_subcommand(1);
    Args a;

    CLI::App* sort = app.add_subcommand("sort", "sort against a hidden order");
    add_common(sort, a, true);
    sort->add_option("order", a.cfg.explicit_order,
                     "the hidden order, e.g. \"bca\" or \"b c a\"");
    sort->add_option("--mode", a.mode, "plain or optimal")
        ->check(CLI::IsMember({"plain", "optimal"}));
    sort->add_option("--order-file", a.cfg.order_file,
                     "read the hidden order from a file");

    add_common(app.add_subcommand("enumerate", "list every admissible order"), a,
               true);
    add_common(app.add_subcommand("check", "axiom and backend verdicts"), a, true);
    add_common(app.add_subcommand("layers", "unlock rounds and bottlenecks"), a,
               true);
    add_common(app.add_subcommand("dijkstra", "distance-ordering checks"), a, true);
    add_common(app.add_subcommand("bench", "suboptimal-family ratio table"), a,
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        a.cfg.mode = a.mode == "optimal" ? RunConfig::Mode::optimal
                                         : RunConfig::Mode::plain;
        if (app.got_subcommand("bench")) return cmd_bench(a.cfg, std::cout);

        Instance inst = parse_instance_file(a.file);
        if (app.got_subcommand("sort")) return cmd_sort(inst, a.cfg, std::cout);
        if (app.got_subcommand("enumerate"))
            return cmd_enumerate(inst, a.cfg, std::cout);
        if (app.got_subcommand("check")) return cmd_check(inst, a.cfg, std::cout);
        if (app.got_subcommand("layers")) return cmd_layers(inst, a.cfg, std::cout);
        return cmd_dijkstra(inst, a.cfg, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "line " << e.line << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
