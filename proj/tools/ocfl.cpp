// ocfl: command-line front end.  Exit 0 = true or success, 1 = false or mismatch,
// 2 = usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ocfl/campaign.hpp"
#include "ocfl/constructions.hpp"
#include "ocfl/formats.hpp"

using namespace ocfl;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Usage : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Usage("cannot write '" + path + "'");
    out << text;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("OMEGA_SEED");
    if (!env || !*env) return 1;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw Usage("OMEGA_SEED is not an unsigned integer: '" + std::string(env) + "'");
    }
}

int max_rank(const LassoWord& w) {
    int n = 0;
    for (const auto& s : letters(w))
        if (s.is_eraser()) n = std::max(n, s.rank());
    return n;
}

Symbol marker(const std::string& token, const char* what) {
    const Symbol s = Symbol::parse(token);
    if (!s.is_base()) throw Usage(std::string(what) + " must be a base letter");
    return s;
}

AbulletSpec load_spec(const std::string& aut_path, const std::string& a, const std::string& b) {
    if (aut_path.empty()) return AbulletSpec::b2();
    const FiniteAutomaton fa = parse_automaton(read_file(aut_path), aut_path);
    if (const auto* m = std::get_if<MullerFA>(&fa)) return AbulletSpec(*m, marker(a, "--a"), marker(b, "--b"));
    const auto& buchi = std::get<BuchiFA>(fa);
    if (!buchi.is_deterministic()) throw Usage("A must be deterministic");
    return AbulletSpec(buchi, marker(a, "--a"), marker(b, "--b"));
}

std::string exported(const PushdownAutomaton& p, bool dot) { return dot ? to_dot(p) : format_pda(p); }
std::string exported(const Grammar& g, bool dot) { return dot ? to_dot(g) : format_grammar(g); }
std::string exported(const BuchiFA& a, bool dot) { return dot ? to_dot(a) : format_automaton(a); }
std::string exported(const MullerFA& a, bool dot) { return dot ? to_dot(a) : format_automaton(a); }
std::string exported(const OmegaKC& okc, bool dot) {
    if (dot) throw Usage("dot output is not available for omega-Kleene closures");
    return format_okc(okc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Omega-context-free languages: erasers, exponentiation and the A-bullet construction"};
    app.require_subcommand(1);

    std::string word, words_file, aut, pda, okc_file, grammar_file, format = "text", output, route = "oracle";
    std::string base, a_marker = "a", b_marker = "b", construction, suite, sampler;
    int rank = -1, n = 1, eraser = 1;
    bool finite = false, abullet = false, explain = false, nonempty = false, do_trim = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::size_t count = 10;
    std::optional<std::size_t> max_len;
    std::optional<int> budget;

    auto* erase = app.add_subcommand("erase", "Evaluate erasers in a word");
    erase->add_option("--word", word, "Lasso word PREFIX | PERIOD (or a finite word with --finite)")->required();
    erase->add_option("--rank", rank, "Erase ~rank down to ~1 (default: highest rank present)");
    erase->add_flag("--finite", finite, "Treat the word as finite and erase one rank");

    auto* member = app.add_subcommand("member", "Lasso-word membership");
    auto* word_opt = member->add_option("--word", word, "Lasso word");
    auto* words_opt = member->add_option("--words", words_file, "File with one lasso word per line");
    word_opt->excludes(words_opt);
    member->add_option("--aut", aut, "Finite automaton file (with --abullet: the automaton A)");
    member->add_option("--pda", pda, "Pushdown automaton file");
    member->add_option("--okc", okc_file, "Omega-Kleene closure file");
    member->add_flag("--abullet", abullet, "Membership in A-bullet (A = B2 unless --aut is given)");
    member->add_option("--route", route, "A-bullet route: oracle, automaton or mpda")
        ->check(CLI::IsMember({"oracle", "automaton", "mpda"}));
    member->add_option("--a", a_marker, "Marker a");
    member->add_option("--b", b_marker, "Marker b");
    member->add_flag("--explain", explain, "Print the oracle's branch details");

    auto* cfg = app.add_subcommand("cfg", "Context-free grammar queries");
    cfg->add_option("--grammar", grammar_file, "Grammar file")->required();
    cfg->add_option("--word", word, "Finite word to test");
    cfg->add_flag("--nonempty", nonempty, "Does the language hold a nonempty word");
    cfg->add_flag("--trim", do_trim, "Print the grammar without useless nonterminals");

    auto* build = app.add_subcommand("build", "Materialize a named construction");
    build->add_option("name", construction,
                      "L3, L-guards, R, B2, B2-muller, B2-okc, exp-okc, exp-mpda, abullet-mpda, abullet-automaton")
        ->required()
        ->check(CLI::IsMember({"L3", "L-guards", "R", "B2", "B2-muller", "B2-okc", "exp-okc", "exp-mpda",
                               "abullet-mpda", "abullet-automaton"}));
    build->add_option("--base", base, "Base alphabet X_A, space separated");
    build->add_option("--n", n, "Number of exponentiations")->check(CLI::Range(0, 8));
    build->add_option("--eraser", eraser, "Eraser rank for L3")->check(CLI::Range(1, 64));
    build->add_option("--aut", aut, "Automaton A for the A-bullet constructions (default B2)");
    build->add_option("--a", a_marker, "Marker a");
    build->add_option("--b", b_marker, "Marker b");
    build->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
    build->add_option("-o,--output", output, "Output file");

    auto* crosscheck = app.add_subcommand("crosscheck", "Run a seeded cross-validation suite");
    crosscheck->add_option("suite", suite, "Suite name or 'all'")->required();
    crosscheck->add_option("--seed", seed, "Seed (default: OMEGA_SEED or 1)");
    crosscheck->add_option("--samples", samples, "Random samples");
    crosscheck->add_option("--max-len", max_len, "guards: exhaustive sweep length (default 8)");
    crosscheck->add_option("--budget", budget, "guards: seconds before the sweep gives up")->check(CLI::PositiveNumber);

    auto* sample = app.add_subcommand("sample", "Print words from a sampler with their labels");
    sample->add_option("sampler", sampler, "sup, guard, fail-R, other, erasers1, erasers2, closing")->required();
    sample->add_option("--seed", seed, "Seed (default: OMEGA_SEED or 1)");
    sample->add_option("--count", count, "Number of words");

    auto* exp = app.add_subcommand("export", "Re-emit a file in canonical text or DOT");
    exp->add_option("--aut", aut, "Finite automaton file");
    exp->add_option("--pda", pda, "Pushdown automaton file");
    exp->add_option("--grammar", grammar_file, "Grammar file");
    exp->add_option("--okc", okc_file, "Omega-Kleene closure file");
    exp->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
    exp->add_option("-o,--output", output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const bool dot = format == "dot";

        if (*erase) {
            if (finite) {
                const LassoWord probe = parse_lasso_line(word + " | x", "--word");
                const int r = rank < 0 ? 1 : rank;
                std::cout << to_string(erase_finite(probe.prefix(), Symbol::eraser(r))) << "\n";
                return kTrue;
            }
            const LassoWord w = parse_lasso_line(word, "--word");
            std::cout << to_string(erase_nested(w, rank < 0 ? max_rank(w) : rank)) << "\n";
            return kTrue;
        }

        if (*member) {
            std::vector<LassoWord> ws;
            if (!words_file.empty()) {
                ws = parse_word_list(read_file(words_file), words_file);
            } else if (!word.empty()) {
                ws.push_back(parse_lasso_line(word, "--word"));
            } else {
                throw Usage("member needs --word or --words");
            }
            const int sources = !aut.empty() + !pda.empty() + !okc_file.empty();
            if (abullet ? (!pda.empty() || !okc_file.empty()) : sources != 1)
                throw Usage("member needs exactly one of --aut, --pda, --okc, --abullet");
            std::function<bool(const LassoWord&)> test;
            std::optional<AbulletSpec> spec;
            std::optional<PushdownAutomaton> machine;
            if (abullet) {
                spec = load_spec(aut, a_marker, b_marker);
                if (route == "automaton") machine = build_abullet_automaton(*spec);
                if (route == "mpda") machine = build_abullet_mpda(*spec);
                test = [&](const LassoWord& w) {
                    if (machine) return bpda_member(*machine, w);
                    const AbulletVerdict v = abullet_classify(*spec, w);
                    if (explain) {
                        std::cout << "in_R " << v.in_R << "\nguard " << v.guard << "\nsup " << v.sup << "\n";
                        if (v.n) std::cout << "n " << v.n << "\n";
                        if (v.decode_failure)
                            std::cout << "decode_failure " << v.decode_failure->position << " "
                                      << v.decode_failure->reason << "\n";
                        if (v.erased) std::cout << "erased " << to_string(*v.erased) << "\n";
                    }
                    return v.member();
                };
            } else if (!aut.empty()) {
                const auto fa = std::make_shared<FiniteAutomaton>(parse_automaton(read_file(aut), aut));
                test = [fa](const LassoWord& w) {
                    if (const auto* b = std::get_if<BuchiFA>(fa.get())) return buchi_member(*b, w);
                    return muller_member(std::get<MullerFA>(*fa), w);
                };
            } else {
                machine = !pda.empty() ? parse_pda(read_file(pda), pda)
                                       : okc_to_bpda(parse_okc(read_file(okc_file), okc_file));
                test = [&](const LassoWord& w) { return bpda_member(*machine, w); };
            }
            bool all = true;
            for (const auto& w : ws) {
                const bool v = test(w);
                all = all && v;
                if (ws.size() == 1 && words_file.empty()) {
                    std::cout << (v ? "true" : "false") << "\n";
                } else {
                    std::cout << to_string(w) << "\t" << (v ? "true" : "false") << "\n";
                }
            }
            return all ? kTrue : kFalse;
        }

        if (*cfg) {
            const Grammar g = parse_grammar(read_file(grammar_file), grammar_file);
            if (do_trim) {
                std::cout << format_grammar(trim(g));
                return kTrue;
            }
            if (nonempty) {
                const bool v = has_nonempty_word(g);
                std::cout << (v ? "true" : "false") << "\n";
                return v ? kTrue : kFalse;
            }
            if (word.empty()) throw Usage("cfg needs --word, --nonempty or --trim");
            const LassoWord probe = parse_lasso_line(word + " | x", "--word");
            const bool v = cfg_member(g, probe.prefix());
            std::cout << (v ? "true" : "false") << "\n";
            return v ? kTrue : kFalse;
        }

        if (*build) {
            const std::string& c = construction;
            const bool binary = c == "B2" || c == "B2-muller" || c == "B2-okc" || c == "exp-okc" || c == "exp-mpda";
            const Alphabet alphabet =
                parse_alphabet(!base.empty() ? base : c == "L3" ? "x" : binary ? "0 1" : "0 1 a b");
            std::string text;
            if (c == "L3") {
                text = exported(build_L3(alphabet, Symbol::eraser(eraser)), dot);
            } else if (c == "L-guards") {
                text = exported(build_L_guards(alphabet, marker(a_marker, "--a"), marker(b_marker, "--b")), dot);
            } else if (c == "R") {
                text = exported(build_R(alphabet, marker(a_marker, "--a"), marker(b_marker, "--b")), dot);
            } else if (c == "B2") {
                text = exported(build_B2(alphabet), dot);
            } else if (c == "B2-muller") {
                text = exported(build_B2_muller(alphabet), dot);
            } else if (c == "B2-okc") {
                text = exported(b2_okc(alphabet), dot);
            } else if (c == "exp-okc") {
                text = exported(iterate_exponentiation(b2_okc(alphabet), n), dot);
            } else if (c == "exp-mpda") {
                PushdownAutomaton p = pda_from_buchi(build_B2(alphabet));
                for (int j = 1; j <= n; ++j) p = exponentiate_mpda(p, Symbol::eraser(j));
                text = exported(p, dot);
            } else {
                const AbulletSpec spec = !aut.empty() || !base.empty()
                                             ? (aut.empty() ? AbulletSpec(build_B2_muller(alphabet), marker(a_marker, "--a"),
                                                                          marker(b_marker, "--b"))
                                                            : load_spec(aut, a_marker, b_marker))
                                             : AbulletSpec::b2();
                text = exported(c == "abullet-mpda" ? build_abullet_mpda(spec) : build_abullet_automaton(spec), dot);
            }
            write_output(text, output);
            return kTrue;
        }

        if (*crosscheck) {
            const std::uint64_t s = seed ? *seed : default_seed();
            std::vector<std::string> names;
            if (suite == "all") {
                names = campaign::suite_names();
            } else {
                names = {suite};
                campaign::default_samples(suite);
            }
            bool ok = true;
            for (const auto& name : names) {
                const auto report =
                    name == "guards" && (max_len || budget)
                        ? campaign::run_guards(s, samples.value_or(campaign::default_samples(name)), max_len.value_or(8),
                                               budget ? std::optional(std::chrono::seconds(*budget)) : std::nullopt)
                        : campaign::run_suite(name, s, samples);
                std::cout << campaign::format_report(report);
                ok = ok && report.ok();
            }
            return ok ? kTrue : kFalse;
        }

        if (*sample) {
            const auto& known = campaign::sampler_names();
            if (std::find(known.begin(), known.end(), sampler) == known.end())
                throw Usage("unknown sampler '" + sampler + "'");
            for (const auto& lw : campaign::sample_words(sampler, seed ? *seed : default_seed(), count))
                std::cout << to_string(lw.word) << "\t" << lw.label << "\n";
            return kTrue;
        }

        if (*exp) {
            const int sources = !aut.empty() + !pda.empty() + !grammar_file.empty() + !okc_file.empty();
            if (sources != 1) throw Usage("export needs exactly one of --aut, --pda, --grammar, --okc");
            std::string text;
            if (!aut.empty()) {
                const auto fa = parse_automaton(read_file(aut), aut);
                text = std::visit([&](const auto& x) { return exported(x, dot); }, fa);
            } else if (!pda.empty()) {
                text = exported(parse_pda(read_file(pda), pda), dot);
            } else if (!grammar_file.empty()) {
                text = exported(parse_grammar(read_file(grammar_file), grammar_file), dot);
            } else {
                text = exported(parse_okc(read_file(okc_file), okc_file), dot);
            }
            write_output(text, output);
            return kTrue;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
