#include "antsort/cli.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support.hpp"

using namespace antsort;

namespace {

const char* kExample2 =
    "formulas\n"
    "alphabet a b c\n"
    "a: 1\n"
    "b: 1\n"
    "c: (a | b)\n";

struct Run {
    int code;
    std::string out;
};

template <class Cmd>
Run capture(Cmd&& cmd) {
    std::ostringstream s;
    int code = cmd(s);
    return {code, s.str()};
}

bool has_line(const std::string& out, const std::string& line) {
    return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sort reports the run as key=value lines") {
    Instance inst = parse_instance_text(kExample2);
    RunConfig cfg;
    cfg.explicit_order = "bca";

    Run r = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "kind=formulas"));
    CHECK(has_line(r.out, "n=3"));
    CHECK(has_line(r.out, "mode=plain"));
    CHECK(has_line(r.out, "order=bca"));
    CHECK(has_line(r.out, "output=bca"));
    CHECK(has_line(r.out, "itb_bits=2.000"));
    CHECK(r.out.find("comparisons=") != std::string::npos);
    CHECK(r.out.find("ratio=") != std::string::npos);
    CHECK(r.out.find("queue0=") == std::string::npos);  // no --transcript

    Run again = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    CHECK(again.out == r.out);

    SUBCASE("transcript lines on request") {
        cfg.transcript = true;
        Run t = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
        CHECK(has_line(t.out, "queue0=ab"));
        CHECK(has_line(t.out, "queue3="));
    }
    SUBCASE("the brute-force limit silences itb") {
        cfg.bf_limit = 2;
        Run t = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
        CHECK(t.code == 0);
        CHECK(t.out.find("itb_bits=") == std::string::npos);
        CHECK(t.out.find("ratio=") == std::string::npos);
    }
}

TEST_CASE("optimal mode sorts a chain for free") {
    Instance inst = parse_instance_text(
        "formulas\nalphabet a b c d e f\n"
        "a: 1\nb: a\nc: b\nd: c\ne: d\nf: e\n");
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::optimal;

    Run r = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "mode=optimal"));
    CHECK(has_line(r.out, "order=abcdef"));  // the only admissible order
    CHECK(has_line(r.out, "output=abcdef"));
    CHECK(has_line(r.out, "comparisons=0"));
    CHECK(has_line(r.out, "itb_bits=0.000"));
}

TEST_CASE("seeded orders are deterministic and admissible") {
    Instance inst = parse_instance_text(kExample2);
    LanguageSet lang = enumerate_language(inst.tables());

    std::set<Word> seen;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RunConfig cfg;
        cfg.seed = seed;
        Word order = resolve_order(inst, cfg);
        CHECK(lang.contains(order));
        CHECK(order == resolve_order(inst, cfg));
        seen.insert(order);
    }
    // the walk reaches every admissible order, not just a favorite
    CHECK(seen.size() == 4);

    RunConfig cfg;
    cfg.seed = 11;
    Run a = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    Run b = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    CHECK(a.out == b.out);
}

TEST_CASE("the hidden order can come from a file") {
    Instance inst = parse_instance_text(kExample2);
    const char* path = "/tmp/antsort_order_test.txt";
    {
        std::ofstream f(path);
        f << "# hidden order\nb c a\n";
    }
    RunConfig cfg;
    cfg.order_file = path;
    Run r = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    CHECK(has_line(r.out, "order=bca"));
    std::remove(path);

    cfg.order_file = "/tmp/antsort_no_such_order.txt";
    CHECK_THROWS_AS(
        capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); }),
        InputError);
}

TEST_CASE("reports tee to a file on request") {
    Instance inst = parse_instance_text(kExample2);
    RunConfig cfg;
    cfg.explicit_order = "abc";
    cfg.out_path = "/tmp/antsort_report_test.txt";

    Run r = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    std::ifstream f(cfg.out_path);
    std::stringstream disk;
    disk << f.rdbuf();
    CHECK(disk.str() == r.out);
    std::remove(cfg.out_path.c_str());

    cfg.out_path = "/no/such/dir/report.txt";
    CHECK_THROWS_AS(
        capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); }),
        InputError);
}

TEST_CASE("a dead element surfaces as a stall with its prefix") {
    Instance inst = parse_instance_text(
        "formulas\nalphabet a b c\na: 1\nb: 1\nc: 0\n");
    RunConfig cfg;
    cfg.explicit_order = "abc";

    Run r = capture([&](std::ostream& s) { return cmd_sort(inst, cfg, s); });
    CHECK(r.code == 1);
    CHECK(has_line(r.out, "error=stall"));
    CHECK(has_line(r.out, "prefix=ab"));

    Run l = capture([&](std::ostream& s) { return cmd_layers(inst, cfg, s); });
    CHECK(l.code == 1);
    CHECK(has_line(l.out, "error=stall"));
}

TEST_CASE("enumerate prints the admissible orders, nothing else") {
    Instance inst = parse_instance_text(kExample2);
    RunConfig cfg;
    Run r = capture([&](std::ostream& s) { return cmd_enumerate(inst, cfg, s); });
    CHECK(r.code == 0);
    CHECK(r.out == "abc\nacb\nbac\nbca\n");

    cfg.bf_limit = 2;
    CHECK_THROWS_AS(
        capture([&](std::ostream& s) { return cmd_enumerate(inst, cfg, s); }),
        LimitError);
}

TEST_CASE("check passes the shipped kinds") {
    const char* texts[] = {
        kExample2,
        "ercs\nalphabet a b c d\na b | c d\na | d\n",
        "digraph\nalphabet r x y\nroot r\nr x\nr y\n",
        "graph\nalphabet a b c d e\nroot a\na b\nb c\nc d\nd e\ne a\n",
        "chordal\nalphabet a b c d\na b\nb c\nc d\n",
        "weighted-digraph\nalphabet s a b t\nroot s\ns a 1\ns b 2\na t 5\nb t 1\n",
    };
    for (const char* text : texts) {
        Instance inst = parse_instance_text(text);
        RunConfig cfg;
        Run r = capture([&](std::ostream& s) { return cmd_check(inst, cfg, s); });
        CHECK(r.code == 0);
        CHECK(has_line(r.out, "antimatroid=ok"));
        CHECK(has_line(r.out, "cds=ok"));
    }
}

TEST_CASE("layers prints rounds and bottlenecks") {
    Instance inst = parse_instance_text(kExample2);
    RunConfig cfg;
    Run r = capture([&](std::ostream& s) { return cmd_layers(inst, cfg, s); });
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "layers=2"));
    CHECK(has_line(r.out, "layer1=ab"));
    CHECK(has_line(r.out, "layer2=c"));
    CHECK(has_line(r.out, "beta=c"));
}

TEST_CASE("dijkstra reports distances and the transcript verdict") {
    Instance inst = parse_instance_text(
        "weighted-digraph\nalphabet s a b t\nroot s\n"
        "s a 1\ns b 2\na t 5\nb t 1\n");
    RunConfig cfg;
    Run r = capture([&](std::ostream& s) { return cmd_dijkstra(inst, cfg, s); });
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "order=sabt"));
    CHECK(has_line(r.out, "dist=0 1 2 3"));
    CHECK(has_line(r.out, "decrease_keys=1"));
    CHECK(has_line(r.out, "transcript=ok"));

    SUBCASE("shape-only instances run the ordering equivalence") {
        Instance star = parse_instance_text(
            "digraph\nalphabet r x y\nroot r\nr x\nr y\n");
        Run v = capture([&](std::ostream& s) { return cmd_dijkstra(star, cfg, s); });
        CHECK(v.code == 0);
        CHECK(has_line(v.out, "orderings=2"));
        CHECK(has_line(v.out, "equivalence=ok"));
    }
    SUBCASE("non-graph instances are refused") {
        Instance f = parse_instance_text(kExample2);
        CHECK_THROWS_AS(
            capture([&](std::ostream& s) { return cmd_dijkstra(f, cfg, s); }),
            UsageError);
    }
}

TEST_CASE("bench emits the ratio table deterministically") {
    RunConfig cfg;
    Run r = capture([&](std::ostream& s) { return cmd_bench(cfg, s); });
    CHECK(r.code == 0);
    CHECK(r.out.rfind("family,n,itb_bits,comparisons,ratio\n", 0) == 0);
    CHECK(r.out.find("\nrotation,8,7.000,") != std::string::npos);
    CHECK(r.out.find("\nblock,4,") != std::string::npos);

    Run again = capture([&](std::ostream& s) { return cmd_bench(cfg, s); });
    CHECK(again.out == r.out);
}

}  // TEST_SUITE
