#include "crossprod/cli.hpp"

#include "crossprod/bundle.hpp"
#include "crossprod/expr.hpp"

#include <CLI11.hpp>

#include <functional>

namespace crossprod {

namespace {

int emit(const CheckReport& report, std::ostream& out) {
    for (const auto& item : report.items) out << format_item(item) << '\n';
    return report.passed() ? kExitPass : kExitFail;
}

std::string factors_name(const Factors& fs) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? "⊗" : "") + fs[i].name();
    return out;
}

void print_map(const MultiLinMap& m, std::ostream& out) {
    out << "map " << factors_name(m.domain()) << " -> " << factors_name(m.codomain()) << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).to_string();
        out << '\n';
    }
}

// Spaces by name, maps by name, algebras as mu_<name> / unit_<name>,
// crossed-product points as point_<name>.
Env environment(const Bundle& b) {
    Env env;
    for (const auto& [name, s] : b.spaces) env.add_space(name, s);
    for (const auto& [name, m] : b.maps) env.bind(name, m);
    for (const auto& [name, a] : b.algebras) {
        env.bind("mu_" + name, a.mult());
        env.bind("unit_" + name, unit_embed(a));
    }
    for (const auto& [name, c] : b.crossed) env.bind("point_" + name, point_embed(b.space(c.space), c.point));
    return env;
}

struct Options {
    std::string file, name, out_path, expr, env_path, equals;
    bool unchecked = false;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of crossed products and their iterations", "crossprod"};
    app.require_subcommand(1);
    Options opt;
    std::function<int()> action;

    auto file_and_name = [&opt](CLI::App* sub) {
        sub->add_option("file", opt.file, "bundle file")->required();
        sub->add_option("name", opt.name, "instance name")->required();
    };

    auto* check = app.add_subcommand("check", "check axioms or hypotheses");
    check->require_subcommand(1);
    auto* check_twisting = check->add_subcommand("twisting", "unit and multiplication conditions of a twisting map");
    file_and_name(check_twisting);
    check_twisting->callback([&] {
        action = [&] { return emit(check_twisting_map(load_bundle(opt.file).twisting_map(opt.name)), out); };
    });
    auto* check_crossed = check->add_subcommand("crossed", "brz1..brz5 for a crossed-product datum");
    file_and_name(check_crossed);
    check_crossed->callback([&] {
        action = [&] { return emit(check_crossed_axioms(load_bundle(opt.file).crossed_data(opt.name)), out); };
    });
    auto* check_hyp = check->add_subcommand("hypotheses", "the four hypotheses of the iteration theorem");
    file_and_name(check_hyp);
    check_hyp->callback([&] {
        action = [&] { return emit(check_hypotheses(load_bundle(opt.file).iteration_data(opt.name)), out); };
    });

    auto* build = app.add_subcommand("build", "construct algebras and write them to a bundle");
    build->require_subcommand(1);
    auto* build_crossed = build->add_subcommand("crossed", "build A ⊗_{R,σ} V");
    file_and_name(build_crossed);
    build_crossed->add_option("-o", opt.out_path, "output bundle")->required();
    build_crossed->add_flag("--unchecked", opt.unchecked, "skip re-verification of the axioms");
    build_crossed->callback([&] {
        action = [&] {
            const CrossedData c = load_bundle(opt.file).crossed_data(opt.name);
            int code = kExitPass;
            if (!opt.unchecked) {
                code = emit(check_crossed_axioms(c), out);
                if (code != kExitPass) return code;
            }
            Bundle result;
            result.add_algebra(opt.name, build_crossed_algebra(c, Verify::unchecked));
            save_bundle(result, opt.out_path);
            return code;
        };
    });
    auto* build_iter = build->add_subcommand("iterated", "build both iterated algebras and certify them");
    file_and_name(build_iter);
    build_iter->add_option("-o", opt.out_path, "output bundle")->required();
    build_iter->add_flag("--unchecked", opt.unchecked, "write the algebras even if the certificate fails");
    build_iter->callback([&] {
        action = [&] {
            const IterationData d = load_bundle(opt.file).iteration_data(opt.name);
            const int code = emit(verify_theorem(d).items(), out);
            if (code != kExitPass && !opt.unchecked) return code;
            Bundle result;
            result.add_algebra(opt.name + ".left", iterate_left(d, Verify::unchecked));
            result.add_algebra(opt.name + ".right", iterate_right(d, Verify::unchecked));
            save_bundle(result, opt.out_path);
            return code;
        };
    });

    auto* verify = app.add_subcommand("verify", "certificates");
    verify->require_subcommand(1);
    auto* verify_thm = verify->add_subcommand("theorem", "full certificate for an iteration datum");
    file_and_name(verify_thm);
    verify_thm->callback([&] {
        action = [&] { return emit(verify_theorem(load_bundle(opt.file).iteration_data(opt.name)).items(), out); };
    });

    auto* examples = app.add_subcommand("examples", "the bundled instance corpus");
    examples->require_subcommand(1);
    auto* list = examples->add_subcommand("list", "list bundled instances");
    list->callback([&] {
        action = [&] {
            auto row = [&out](const std::string& kind, const auto& inst) {
                out << kind << ' ' << inst.name << ' '
                    << (inst.fails_at ? "fails-at " + *inst.fails_at : std::string("passes")) << '\n';
            };
            for (const auto& i : bundled_algebras()) row("algebra", i);
            for (const auto& i : bundled_twisting_maps()) row("twisting", i);
            for (const auto& i : bundled_crossed()) row("crossed", i);
            for (const auto& i : bundled_iterations()) row("iteration", i);
            return kExitPass;
        };
    });
    auto* emit_cmd = examples->add_subcommand("emit", "write an instance (or \"all\") to a bundle");
    emit_cmd->add_option("name", opt.name, "instance name or \"all\"")->required();
    emit_cmd->add_option("-o", opt.out_path, "output bundle")->required();
    emit_cmd->callback([&] {
        action = [&] {
            save_bundle(opt.name == "all" ? corpus_bundle() : instance_bundle(opt.name), opt.out_path);
            return kExitPass;
        };
    });

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a map expression");
    eval_cmd->add_option("expr", opt.expr, "expression, e.g. \"(mu_A (x) id_V) o (id_A (x) sigma)\"")->required();
    eval_cmd->add_option("--env", opt.env_path, "bundle providing spaces and maps")->required();
    eval_cmd->add_option("--equals", opt.equals, "compare against a second expression");
    eval_cmd->callback([&] {
        action = [&] {
            const Env env = environment(load_bundle(opt.env_path));
            const MultiLinMap lhs = eval(opt.expr, env);
            if (opt.equals.empty()) {
                print_map(lhs, out);
                return kExitPass;
            }
            const MultiLinMap rhs = eval(opt.equals, env);
            if (lhs.cols() != rhs.cols() || lhs.rows() != rhs.rows()) {
                throw DimensionMismatch("the two expressions have different shapes");
            }
            CheckReport report;
            report.items.push_back(check_identity("equals", lhs, rhs));
            return emit(report, out);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace crossprod
