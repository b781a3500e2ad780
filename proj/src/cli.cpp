#include "antsort/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "antsort/limits.hpp"
#include "antsort/optimal.hpp"

namespace antsort {

namespace {

std::string fixed3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string plain_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// the whole report goes to the console and, when asked, to a file too
int finish(const RunConfig& cfg, std::ostream& console, const std::string& text,
           int code) {
    console << text;
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) throw InputError("cannot write '" + cfg.out_path + "'");
        f << text;
    }
    return code;
}

std::string head_lines(const Instance& inst) {
    return std::string("kind=") + kind_name(inst.kind) +
           "\nn=" + std::to_string(inst.size()) + "\n";
}

void transcript_lines(std::string& out, const Alphabet& ab, const Transcript& t) {
    for (size_t i = 0; i < t.queues.size(); ++i)
        out += "queue" + std::to_string(i) + "=" + ab.format_word(t.queues[i]) + "\n";
}

Word read_order_file(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::string text, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line + " ";
    }
    return parse_word(inst.alphabet, text);
}

}  // namespace

Word resolve_order(const Instance& inst, const RunConfig& cfg) {
    if (!cfg.explicit_order.empty())
        return parse_word(inst.alphabet, cfg.explicit_order);
    if (!cfg.order_file.empty()) return read_order_file(inst, cfg.order_file);

    // seeded walk: uniform among currently available at every step; reaches
    // any admissible order, with probability skewed toward early unlocks
    auto cds = inst.make_cds();
    std::mt19937_64 rng(cfg.seed);
    std::vector<ElementId> avail = cds->init();
    std::sort(avail.begin(), avail.end());
    Word order;
    while (!avail.empty()) {
        std::uniform_int_distribution<size_t> pick(0, avail.size() - 1);
        size_t i = pick(rng);
        ElementId x = avail[i];
        avail.erase(avail.begin() + i);
        order.push_back(x);
        std::vector<ElementId> fresh = cds->step(x);
        avail.insert(avail.end(), fresh.begin(), fresh.end());
        std::sort(avail.begin(), avail.end());
    }
    if (static_cast<int>(order.size()) != inst.size())
        throw StallError("order sampling stalled after " +
                             std::to_string(order.size()) + " of " +
                             std::to_string(inst.size()) + " elements",
                         order);
    return order;
}

int cmd_sort(const Instance& inst, const RunConfig& cfg, std::ostream& console) {
    const Alphabet& ab = inst.alphabet;
    std::string out = head_lines(inst);
    out += std::string("mode=") +
           (cfg.mode == RunConfig::Mode::optimal ? "optimal" : "plain") + "\n";

    Word order = resolve_order(inst, cfg);
    out += "order=" + ab.format_word(order) + "\n";
    ComparisonOracle oracle(order);

    auto cds = inst.make_cds();
    SortOptions opt;
    opt.validate = cfg.validate;
    opt.record_transcript = cfg.transcript;
    SortReport rep;
    try {
        rep = cfg.mode == RunConfig::Mode::optimal
                  ? optimal_sort(*cds, oracle, opt)
                  : topological_heapsort(*cds, oracle, opt);
    } catch (const StallError& e) {
        out += "error=stall\nprefix=" + ab.format_word(e.prefix) + "\ndetail=" +
               e.what() + "\n";
        return finish(cfg, console, out, 1);
    } catch (const MismatchError& e) {
        out += std::string("error=mismatch\ndetail=") + e.what() + "\n";
        return finish(cfg, console, out, 1);
    } catch (const ContractError& e) {
        out += std::string("error=contract\ndetail=") + e.what() + "\n";
        return finish(cfg, console, out, 1);
    }

    out += "output=" + ab.format_word(rep.output) + "\n";
    out += "comparisons=" + std::to_string(rep.comparisons) + "\n";
    out += "cds_steps=" + std::to_string(rep.cds_steps) + "\n";
    out += "queue_events=" + std::to_string(rep.queue_events) + "\n";
    if (inst.size() <= cfg.bf_limit) {
        double itb = itb_bits(enumerate_language(inst.tables(cfg.bf_limit),
                                                 cfg.bf_limit));
        out += "itb_bits=" + fixed3(itb) + "\n";
        out += "ratio=" + fixed3(static_cast<double>(rep.comparisons) / (1 + itb)) +
               "\n";
    }
    if (cfg.transcript) transcript_lines(out, ab, rep.transcript);
    return finish(cfg, console, out, 0);
}

int cmd_enumerate(const Instance& inst, const RunConfig& cfg,
                  std::ostream& console) {
    LanguageSet lang = enumerate_language(inst.tables(cfg.bf_limit), cfg.bf_limit);
    std::string out;
    for (const Word& pi : lang.permutations())
        out += inst.alphabet.format_word(pi) + "\n";
    return finish(cfg, console, out, 0);
}

int cmd_check(const Instance& inst, const RunConfig& cfg, std::ostream& console) {
    const Alphabet& ab = inst.alphabet;
    std::string out = head_lines(inst);
    int code = 0;

    ExplicitMps truth = inst.tables(cfg.bf_limit);
    LanguageSet lang = enumerate_language(truth, cfg.bf_limit);
    AxiomVerdict ax = check_antimatroid_axioms(lang);
    if (ax.ok) {
        out += "antimatroid=ok\n";
    } else {
        out += "antimatroid=fail\nreason=" + ax.reason + "\nalpha=" +
               ab.format_word(ax.alpha) + "\nbeta=" + ab.format_word(ax.beta) + "\n";
        code = 1;
    }

    auto cds = inst.make_cds();
    ValidateResult vr = validate_cds(*cds, truth, cfg.bf_limit);
    if (vr.ok) {
        out += "cds=ok\n";
    } else {
        out += "cds=fail\nword=" + ab.format_word(vr.word) + "\nexpected=" +
               ab.format_word(vr.expected) + "\ngot=" + ab.format_word(vr.got) +
               "\ndetail=" + vr.detail + "\n";
        code = 1;
    }
    return finish(cfg, console, out, code);
}

int cmd_layers(const Instance& inst, const RunConfig& cfg, std::ostream& console) {
    const Alphabet& ab = inst.alphabet;
    std::string out = head_lines(inst);

    auto cds = inst.make_cds();
    LayerSequence seq;
    try {
        if (cfg.validate) {
            ValidatedCds vc(*cds);
            seq = compute_layers(vc);
        } else {
            seq = compute_layers(*cds);
        }
    } catch (const StallError& e) {
        out += "error=stall\nprefix=" + ab.format_word(e.prefix) + "\ndetail=" +
               e.what() + "\n";
        return finish(cfg, console, out, 1);
    }

    out += "layers=" + std::to_string(seq.layers.size()) + "\n";
    for (size_t i = 0; i < seq.layers.size(); ++i)
        out += "layer" + std::to_string(i + 1) + "=" +
               ab.format_word(seq.layers[i]) + "\n";
    out += "beta=" + ab.format_word(bottleneck_sequence(seq)) + "\n";
    return finish(cfg, console, out, 0);
}

int cmd_dijkstra(const Instance& inst, const RunConfig& cfg, std::ostream& console) {
    const Alphabet& ab = inst.alphabet;
    std::string out = head_lines(inst);

    if (inst.kind == InstanceKind::weighted_digraph) {
        DistanceRun run = dijkstra_order(*inst.weighted);
        out += "order=" + ab.format_word(run.order) + "\n";
        out += "dist=";
        for (int v = 0; v < inst.size(); ++v)
            out += (v ? " " : "") + plain_number(run.dist[v]);
        out += "\ndecrease_keys=" + std::to_string(run.decrease_keys) + "\n";

        EquivalenceVerdict v = check_transcript_equivalence(*inst.weighted);
        out += std::string("transcript=") + (v.ok ? "ok" : "fail") + "\n";
        if (!v.ok) out += "detail=" + v.detail + "\n";
        if (cfg.transcript) transcript_lines(out, ab, run.transcript);
        return finish(cfg, console, out, v.ok ? 0 : 1);
    }
    if (inst.kind == InstanceKind::digraph || inst.kind == InstanceKind::graph) {
        const int trials = 50;
        EquivalenceVerdict v =
            check_distance_ordering_equivalence(*inst.graph, trials, cfg.seed);
        out += "orderings=" + std::to_string(v.cases - trials) + "\n";
        out += "trials=" + std::to_string(trials) + "\n";
        out += std::string("equivalence=") + (v.ok ? "ok" : "fail") + "\n";
        if (!v.ok) out += "detail=" + v.detail + "\n";
        return finish(cfg, console, out, v.ok ? 0 : 1);
    }
    throw UsageError("dijkstra needs a digraph, graph, or weighted-digraph "
                     "instance");
}

int cmd_bench(const RunConfig& cfg, std::ostream& console) {
    SuboptimalityReport rep = demonstrate_suboptimality();
    return finish(cfg, console, format_suboptimality_csv(rep), 0);
}

}  // namespace antsort
