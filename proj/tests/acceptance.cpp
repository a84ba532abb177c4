// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "crossprod/bundle.hpp"
#include "crossprod/cli.hpp"
#include "crossprod/errors.hpp"
#include "oracles.hpp"
#include "report_lines.hpp"
#include "transcriptions.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace crossprod;
namespace fs = std::filesystem;

namespace {

// Each criterion returns a one-line summary and sets `ok`.
struct Outcome {
    bool ok = true;
    std::string detail;
    std::string failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            failure = what;
        }
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "crossprod-acceptance";
    fs::create_directories(dir);
    return dir / name;
}

// ---------------------------------------------------------------- AC1
Outcome crossed_soundness() {
    Outcome o;
    int n = 0;
    for (const auto& inst : bundled_crossed()) {
        if (inst.fails_at) continue;
        ++n;
        o.require(check_crossed_axioms(inst.data).passed(), inst.name + ": axioms");
        const Algebra alg = build_crossed_algebra(inst.data);
        o.require(check_algebra(alg).passed(), inst.name + ": check_algebra");
        o.require(maps_equal(alg.mult(), oracle::crossed_mult(inst.data)), inst.name + ": pointwise product");
        o.require(oracle::associative(alg), inst.name + ": brute-force associativity");
    }
    o.require(n >= 6, "fewer than 6 positive crossed data");
    o.detail = std::to_string(n) + " crossed data, axioms + algebra checks exact";
    return o;
}

// ---------------------------------------------------------------- AC2
Outcome theorem_certificate() {
    Outcome o;
    int n = 0;
    for (const auto& inst : bundled_iterations()) {
        if (inst.fails_at) continue;
        ++n;
        const auto cert = verify_theorem(inst.data);
        const auto items = cert.items();
        o.require(items.items.size() == 16, inst.name + ": certificate size");
        for (const auto& item : items.items) o.require(item.pass, inst.name + ": " + item.name);
        o.require(maps_equal(iterate_left(inst.data).mult(), oracle::explicit_mult(inst.data)),
                  inst.name + ": pointwise closed formula");
    }
    o.require(n >= 5, "fewer than 5 positive iteration data");
    o.detail = std::to_string(n) + " iteration data, 16 certificate fields each";
    return o;
}

// ---------------------------------------------------------------- AC3
Outcome iterated_ttp_reduction() {
    Outcome o;
    const Algebra d = truncated_poly(2);
    const std::vector<int> odd{0, 1};
    const MultiLinMap s = oracle::sign_map(d, odd, d, odd);
    IterationData const* found = nullptr;
    const auto iters = bundled_iterations();
    for (const auto& inst : iters)
        if (inst.name == "super-triple") found = &inst.data;
    o.require(found != nullptr, "super-triple missing");
    if (!found) return o;
    o.require(found->left().r_map().entries() == s.entries(), "R1 is not the sign twist");
    o.require(found->right().r_map().entries() == s.entries(), "R3 is not the sign twist");
    o.require(found->q_map().entries() == s.entries(), "R2 is not the sign twist");
    const MultiLinMap direct = oracle::iterated_ttp(d, d, d, s, s, s);
    const MultiLinMap left = iterate_left(*found).mult();
    const MultiLinMap right = iterate_right(*found).mult();
    o.require(maps_equal(left, direct), "iterate_left differs from the direct formula");
    o.require(maps_equal(right, direct), "iterate_right differs from the direct formula");
    o.detail = std::to_string(direct.rows()) + "x" + std::to_string(direct.cols()) +
               " structure tensor, all 64 basis pairs";
    return o;
}

// ---------------------------------------------------------------- AC4
Outcome trivial_extension_universality() {
    Outcome o;
    int pairs = 0;
    for (const auto& c : bundled_crossed()) {
        if (c.fails_at) continue;
        for (const auto& w : bundled_algebras()) {
            if (c.data.alg().dim() * c.data.space().dim() * w.data.dim() > 64) continue;
            ++pairs;
            const auto report = check_hypotheses(example_trivial_extension(c.data, w.data));
            o.require(report.passed(), c.name + " x " + w.name);
        }
    }
    o.require(pairs > 0, "no pairs");
    o.detail = std::to_string(pairs) + " (crossed, algebra) pairs";
    return o;
}

// ---------------------------------------------------------------- AC5
Outcome negative_suite() {
    Outcome o;
    const fs::path bundle = scratch("corpus.json");
    save_bundle(corpus_bundle(), bundle);
    auto cli = [&](std::vector<std::string> args, std::string& out) {
        std::ostringstream so, se;
        const int code = run_command(args, so, se);
        out = so.str();
        return code;
    };
    int n = 0;
    auto expect_cli = [&](const std::string& sub, const std::string& name, const std::string& label) {
        std::string out;
        const int code = cli({"check", sub, bundle.string(), name}, out);
        o.require(code == kExitFail, name + ": exit code " + std::to_string(code));
        const auto items = report_lines::parse(out);
        o.require(items.has_value(), name + ": unparseable report");
        if (!items) return;
        const auto* first = report_lines::first_failure(*items);
        o.require(first && first->name == label, name + ": first FAIL line is not " + label);
        o.require(out.find("ITEM " + label + ": FAIL at (") != std::string::npos, name + ": no FAIL line");
    };
    for (const auto& inst : bundled_crossed()) {
        if (!inst.fails_at) continue;
        ++n;
        const auto r = check_crossed_axioms(inst.data);
        o.require(r.first_failure() && r.first_failure()->name == *inst.fails_at, inst.name + ": library");
        expect_cli("crossed", inst.name, *inst.fails_at);
    }
    for (const auto& inst : bundled_iterations()) {
        if (!inst.fails_at) continue;
        ++n;
        const auto r = check_hypotheses(inst.data);
        o.require(r.first_failure() && r.first_failure()->name == *inst.fails_at, inst.name + ": library");
        expect_cli("hypotheses", inst.name, *inst.fails_at);
        std::string out;
        o.require(cli({"verify", "theorem", bundle.string(), inst.name}, out) == kExitFail,
                  inst.name + ": verify theorem exit code");
    }
    o.require(n == 9, "expected 9 labeled negatives, found " + std::to_string(n));
    o.detail = std::to_string(n) + " labeled negatives (brz1-5, unitQ, braid, hex-sigma, hex-nu)";
    return o;
}

// ---------------------------------------------------------------- AC6
Outcome sweedler_agreement() {
    Outcome o;
    int comparisons = 0;
    auto compare_crossed = [&](const std::string& who, const CrossedData& c) {
        const Env env = transcribe::crossed_env(c);
        const auto ops = transcribe::crossed_operator_forms(c);
        const auto pts = transcribe::sweedler_forms(c);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& dsl = transcribe::crossed_identities()[i];
            const auto& sw = transcribe::sweedler_identities()[i];
            o.require(maps_equal(eval(dsl.lhs, env), ops[i].lhs), who + ": " + dsl.name + " lhs");
            o.require(maps_equal(eval(dsl.rhs, env), ops[i].rhs), who + ": " + dsl.name + " rhs");
            o.require(maps_equal(eval(sw.lhs, env), pts[i].lhs), who + ": " + sw.name + " lhs");
            o.require(maps_equal(eval(sw.rhs, env), pts[i].rhs), who + ": " + sw.name + " rhs");
            o.require(maps_equal(pts[i].lhs, pts[i].rhs), who + ": " + sw.name + " does not hold");
            comparisons += 5;
        }
    };
    for (const auto& inst : bundled_crossed())
        if (!inst.fails_at) compare_crossed(inst.name, inst.data);
    for (const auto& inst : bundled_iterations()) {
        if (inst.fails_at) continue;
        compare_crossed(inst.name + ".left", inst.data.left());
        compare_crossed(inst.name + ".right", inst.data.right());
        const Env env = transcribe::iteration_env(inst.data);
        const auto ops = transcribe::hypothesis_operator_forms(inst.data);
        const auto pts = transcribe::hypothesis_sweedler_forms(inst.data);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& dsl = transcribe::hypothesis_identities()[i];
            const auto lhs = eval(dsl.lhs, env), rhs = eval(dsl.rhs, env);
            o.require(maps_equal(lhs, ops[i].lhs) && maps_equal(rhs, ops[i].rhs), inst.name + ": " + dsl.name + " operator");
            o.require(maps_equal(lhs, pts[i].lhs) && maps_equal(rhs, pts[i].rhs), inst.name + ": " + dsl.name + " pointwise");
            o.require(maps_equal(lhs, rhs), inst.name + ": " + dsl.name + " does not hold");
            comparisons += 5;
        }
    }
    o.detail = std::to_string(comparisons) + " exact matrix comparisons over brz3-8, braidcoord, PQsigma, RQniu";
    return o;
}

// ---------------------------------------------------------------- AC7
Outcome arithmetic_hygiene() {
    Outcome o;
    std::mt19937_64 rng(20241019);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000), op(0, 3);
    long ops = 0, stored = 0;
    std::vector<Scalar> pool{Scalar(1), Scalar(-1, 2)};
    while (ops < 5000) {
        const Scalar a = pool[rng() % pool.size()];
        const Scalar b = Scalar(num(rng), den(rng));
        Scalar c;
        switch (op(rng)) {
            case 0: c = a + b; break;
            case 1: c = a - b; break;
            case 2: c = a * b; break;
            default:
                if (b.is_zero()) continue;
                c = a / b;
        }
        ++ops;
        ++stored;
        o.require(b.is_canonical() && c.is_canonical(), "non-canonical scalar " + c.to_string());
        o.require(Scalar::parse(c.to_string()) == c, "text round trip of " + c.to_string());
        if (pool.size() < 64) pool.push_back(c);
        else pool[rng() % pool.size()] = c;
    }

    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<long> small(-6, 6), pos(1, 5);
    auto random_map = [&](std::size_t m, std::size_t n) {
        std::vector<Scalar> e;
        for (std::size_t i = 0; i < m * n; ++i) e.emplace_back(small(rng), pos(rng));
        return MultiLinMap({Space::with_dim("X", n)}, {Space::with_dim("Y", m)}, std::move(e));
    };
    auto all_canonical = [&](const MultiLinMap& f) {
        for (const auto& s : f.entries()) {
            ++stored;
            if (!s.is_canonical()) return false;
        }
        return true;
    };
    int laws = 0;
    for (; laws < 150; ++laws) {
        const std::size_t a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng), e = dim(rng), f = dim(rng);
        const auto f1 = random_map(a, b), f2 = random_map(b, c), g1 = random_map(d, e), g2 = random_map(e, f);
        const auto lhs = compose(kron(f1, g1), kron(f2, g2));
        const auto rhs = kron(compose(f1, f2), compose(g1, g2));
        o.require(maps_equal(lhs, rhs), "interchange law, trial " + std::to_string(laws));
        o.require(all_canonical(lhs) && all_canonical(rhs), "non-canonical matrix entry");
    }
    o.detail = std::to_string(ops) + " random rational ops, " + std::to_string(stored) + " stored scalars canonical, " +
               std::to_string(laws) + " interchange-law trials";
    return o;
}

// ---------------------------------------------------------------- AC8
Outcome io_round_trip() {
    Outcome o;
    const Bundle corpus = corpus_bundle();
    const fs::path p1 = scratch("rt1.json"), p2 = scratch("rt2.json");
    save_bundle(corpus, p1);
    const Bundle loaded = load_bundle(p1);
    save_bundle(loaded, p2);
    o.require(slurp(p1) == slurp(p2), "save∘load∘save is not byte-identical");
    o.require(loaded == corpus, "load∘save is not graph-identical");
    for (const auto& [name, _] : corpus.crossed)
        o.require(loaded.crossed_data(name) == corpus.crossed_data(name), "crossed " + name);
    for (const auto& [name, _] : corpus.iteration)
        o.require(loaded.iteration_data(name) == corpus.iteration_data(name), "iteration " + name);
    for (const auto& [name, _] : corpus.twisting)
        o.require(loaded.twisting_map(name) == corpus.twisting_map(name), "twisting " + name);
    o.detail = std::to_string(corpus.spaces.size() + corpus.algebras.size() + corpus.maps.size() +
                              corpus.twisting.size() + corpus.crossed.size() + corpus.iteration.size()) +
               " objects, " + std::to_string(slurp(p1).size()) + " bytes";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 crossed-product soundness", crossed_soundness},
        {"AC2 iteration theorem certificate", theorem_certificate},
        {"AC3 iterated twisted tensor product reduction", iterated_ttp_reduction},
        {"AC4 trivial extension universality", trivial_extension_universality},
        {"AC5 negative suite", negative_suite},
        {"AC6 Sweedler/operator agreement", sweedler_agreement},
        {"AC7 exact-arithmetic hygiene", arithmetic_hygiene},
        {"AC8 I/O round trip", io_round_trip},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.ok ? "PASS " : "FAIL ") << name << ": " << (o.ok ? o.detail : o.failure) << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
