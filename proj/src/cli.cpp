#include "k3strat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "k3strat/mass.hpp"
#include "k3strat/version.hpp"

namespace k3strat {

namespace {

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string stratum_label(const StratumDescriptor& d) {
    std::ostringstream os;
    os << invariant_kind_name(d.kind) << "(" << d.value << ")";
    if (d.twisted) os << "'";
    return os.str();
}

std::string join_letters(const std::vector<int>& letters) {
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << letters[i];
    }
    return os.str();
}

Matrix read_flag_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open flag file " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("flag file " + path + " is not valid JSON: " +
                          std::string(e.what()));
    }
    return matrix_from_json(j);
}

WeylElement element_from_options(const std::string& family, const std::string& window,
                                 int m_opt) {
    const std::vector<int> win = parse_window(window);
    if (m_opt > 0 && m_opt != static_cast<int>(win.size()))
        throw DomainError("--m disagrees with the window length");
    return WeylElement::from_window(family_from_name(family), win);
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args) {
    CommandOutcome out;

    const char* env_format = std::getenv("K3STRAT_FORMAT");
    std::string format = env_format && *env_format ? env_format : "json";
    long long budget = default_enumeration_budget;

    std::string command;
    Json parameters = Json::object();
    Json result;
    std::string text;

    CLI::App app{"exact combinatorics of the stratified moduli of K3 surfaces"};
    app.name("k3strat");
    app.add_option("--format", format, "output mode: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", budget, "cap for exhaustive scans, compared against p^n");
    app.require_subcommand(1);

    // ---- weyl ----------------------------------------------------------
    auto* weyl = app.add_subcommand("weyl", "signed permutation groups");
    weyl->fallthrough();
    weyl->require_subcommand(1);

    {
        auto* finals = weyl->add_subcommand("finals", "coset-minimal elements of the stratification order");
        finals->fallthrough();
        auto family = std::make_shared<std::string>();
        auto m = std::make_shared<int>(0);
        finals->add_option("--family", *family, "B or D")->required();
        finals->add_option("--m", *m, "rank")->required();
        finals->callback([&, family, m] {
            command = "weyl finals";
            parameters = {{"family", *family}, {"m", *m}};
            const std::vector<WeylElement> els =
                final_elements(family_from_name(*family), *m);
            result = Json::array();
            std::ostringstream os;
            for (size_t j = 0; j < els.size(); ++j) {
                Json row = json_of(els[j]);
                row["index"] = j + 1;
                result.push_back(std::move(row));
                os << "w_" << (j + 1) << "  " << window_string(els[j])
                   << "  length " << length(els[j]) << "\n";
            }
            text = os.str();
        });
    }
    {
        auto* reduce = weyl->add_subcommand("reduce", "deterministic reduced word");
        reduce->fallthrough();
        auto family = std::make_shared<std::string>();
        auto window = std::make_shared<std::string>();
        auto m = std::make_shared<int>(0);
        reduce->add_option("--family", *family, "B, C, or D")->required();
        reduce->add_option("--window", *window, "comma-separated images of 1..m")->required();
        reduce->add_option("--m", *m, "rank (checked against the window)");
        reduce->callback([&, family, window, m] {
            command = "weyl reduce";
            parameters = {{"family", *family}, {"window", *window}};
            const WeylElement w = element_from_options(*family, *window, *m);
            const std::vector<int> letters = reduced_word(w);
            result = {{"letters", letters},
                      {"length", length(w)},
                      {"window", w.window()},
                      {"family", family_name(w.family())}};
            text = "letters: " + join_letters(letters) +
                   "\nlength: " + std::to_string(length(w));
        });
    }
    {
        auto* bruhat = weyl->add_subcommand("bruhat", "Bruhat order comparison");
        bruhat->fallthrough();
        auto family = std::make_shared<std::string>();
        auto u = std::make_shared<std::string>();
        auto w = std::make_shared<std::string>();
        auto m = std::make_shared<int>(0);
        bruhat->add_option("--family", *family, "B, C, or D")->required();
        bruhat->add_option("--u", *u, "window of the candidate lower element")->required();
        bruhat->add_option("--w", *w, "window of the upper element")->required();
        bruhat->add_option("--m", *m, "rank (checked against the windows)");
        bruhat->callback([&, family, u, w, m] {
            command = "weyl bruhat";
            parameters = {{"family", *family}, {"u", *u}, {"w", *w}};
            const WeylElement ue = element_from_options(*family, *u, *m);
            const WeylElement we = element_from_options(*family, *w, *m);
            const bool leq = bruhat_leq(ue, we);
            result = {{"leq", leq}};
            text = bool_word(leq);
        });
    }

    // ---- schubert ------------------------------------------------------
    auto* schubert = app.add_subcommand("schubert", "cover combinatorics");
    schubert->fallthrough();
    schubert->require_subcommand(1);

    {
        auto* covers = schubert->add_subcommand("covers", "colength-1 covers by simple reflections");
        covers->fallthrough();
        auto family = std::make_shared<std::string>();
        auto window = std::make_shared<std::string>();
        auto m = std::make_shared<int>(0);
        covers->add_option("--family", *family, "B, C, or D")->required();
        covers->add_option("--window", *window, "window of the element")->required();
        covers->add_option("--m", *m, "rank (checked against the window)");
        covers->callback([&, family, window, m] {
            command = "schubert covers";
            parameters = {{"family", *family}, {"window", *window}};
            const WeylElement w = element_from_options(*family, *window, *m);
            result = Json::array();
            std::ostringstream os;
            for (const CoverDatum& c : pieri_covers(w)) {
                result.push_back(json_of(c));
                os << "i=" << c.reflection_index << " -> "
                   << window_string(c.target) << "\n";
            }
            text = os.str();
        });
    }
    {
        auto* classify = schubert->add_subcommand("classify", "length behaviour of the conjugate s_i w s_i");
        classify->fallthrough();
        auto family = std::make_shared<std::string>();
        auto window = std::make_shared<std::string>();
        auto i = std::make_shared<int>(0);
        classify->add_option("--family", *family, "B, C, or D")->required();
        classify->add_option("--window", *window, "window of the element")->required();
        classify->add_option("--i", *i, "reflection index, 1 < i <= m")->required();
        classify->callback([&, family, window, i] {
            command = "schubert classify";
            parameters = {{"family", *family}, {"window", *window}, {"i", *i}};
            const WeylElement w = element_from_options(*family, *window, 0);
            const CoverKind kind = classify_cover(w, *i);
            result = {{"kind", cover_kind_name(kind)}};
            text = cover_kind_name(kind);
        });
    }

    // ---- flags ---------------------------------------------------------
    auto* flags = app.add_subcommand("flags", "isotropic flags over F_p");
    flags->fallthrough();
    flags->require_subcommand(1);

    {
        auto* count = flags->add_subcommand("count", "number of complete self-dual flags");
        count->fallthrough();
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<int>(0);
        count->add_option("--n", *n, "space dimension")->required();
        count->add_option("--p", *p, "odd prime")->required();
        count->callback([&, n, p] {
            command = "flags count";
            parameters = {{"n", *n}, {"p", *p}};
            const long long c = count_isotropic_flags(make_split_space(*n, *p), budget);
            result = c;
            text = std::to_string(c);
        });
    }
    {
        auto* relpos = flags->add_subcommand("relpos", "relative position of two flags");
        relpos->fallthrough();
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<int>(0);
        auto afile = std::make_shared<std::string>();
        auto bfile = std::make_shared<std::string>();
        relpos->add_option("--n", *n, "space dimension")->required();
        relpos->add_option("--p", *p, "odd prime")->required();
        relpos->add_option("--a", *afile, "JSON file with the first flag's isotropic chain rows")
            ->required()->check(CLI::ExistingFile);
        relpos->add_option("--b", *bfile, "JSON file with the second flag's isotropic chain rows")
            ->required()->check(CLI::ExistingFile);
        relpos->callback([&, n, p, afile, bfile] {
            command = "flags relpos";
            parameters = {{"n", *n}, {"p", *p}, {"a", *afile}, {"b", *bfile}};
            const QuadraticSpace V = make_split_space(*n, *p);
            const IsotropicFlag a =
                complete_flag(V, IsotropicFlag::from_chain(V, read_flag_file(*afile)));
            const IsotropicFlag b =
                complete_flag(V, IsotropicFlag::from_chain(V, read_flag_file(*bfile)));
            const WeylElement w = relative_position(V, a, b);
            result = json_of(w);
            text = window_string(w) + "  family " + family_name(w.family()) +
                   "  length " + std::to_string(length(w));
        });
    }
    {
        auto* census = flags->add_subcommand("census", "flags counted by relative position to the coordinate flag");
        census->fallthrough();
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<int>(0);
        census->add_option("--n", *n, "space dimension")->required();
        census->add_option("--p", *p, "odd prime")->required();
        census->callback([&, n, p] {
            command = "flags census";
            parameters = {{"n", *n}, {"p", *p}};
            const QuadraticSpace V = make_split_space(*n, *p);
            const CensusMap census_map = bruhat_cell_census(V, standard_flag(V), budget);
            result = json_of(census_map);
            std::ostringstream os;
            long long total = 0;
            for (const auto& [w, c] : census_map) {
                os << window_string(w) << "  length " << length(w) << ": " << c << "\n";
                total += c;
            }
            os << "total: " << total << "\n";
            text = os.str();
        });
    }
    {
        auto* hermitian = flags->add_subcommand("hermitian", "projective point count of the norm-form surface");
        hermitian->fallthrough();
        auto p = std::make_shared<int>(0);
        hermitian->add_option("--p", *p, "odd prime")->required();
        hermitian->callback([&, p] {
            command = "flags hermitian";
            parameters = {{"p", *p}};
            const long long c = hermitian_point_count(*p, budget);
            result = c;
            text = std::to_string(c);
        });
    }

    // ---- strata --------------------------------------------------------
    auto* strata = app.add_subcommand("strata", "stratification dictionary and classes");
    strata->fallthrough();
    strata->require_subcommand(1);

    {
        auto* classes = strata->add_subcommand("classes", "cycle classes of all realized closed strata");
        classes->fallthrough();
        auto n = std::make_shared<int>(0);
        auto at_p = std::make_shared<long long>(0);
        classes->add_option("--n", *n, "dimension of the primitive cohomology")->required();
        auto* at_p_opt = classes->add_option("--at-p", *at_p, "evaluate coefficients at this odd prime");
        classes->callback([&, n, at_p, at_p_opt] {
            command = "strata classes";
            parameters = {{"n", *n}};
            const bool evaluate = at_p_opt->count() > 0;
            if (evaluate) parameters["at_p"] = *at_p;
            result = Json::array();
            std::ostringstream os;
            for (const auto& chain : stratum_poset(*n)) {
                for (const StratumDescriptor& d : chain) {
                    const ClassExpr expr = cycle_class(d);
                    const WeylElement w = final_for_invariant(d);
                    Json row = json_of(expr);
                    row["window"] = w.window();
                    row["length"] = length(w);
                    os << stratum_label(d) << "  " << window_string(w) << "  ";
                    if (evaluate) {
                        const auto [value, power] = evaluate_class(expr, *at_p);
                        row["at_p"] = to_string(value);
                        os << to_string(value) << " · λ^" << power;
                    } else {
                        os << expr.factored << " · λ^" << expr.lambda_power;
                    }
                    if (!expr.note.empty()) os << "  [" << expr.note << "]";
                    os << "\n";
                    result.push_back(std::move(row));
                }
            }
            text = os.str();
        });
    }
    {
        auto* dict = strata->add_subcommand("dict", "final element attached to an invariant value");
        dict->fallthrough();
        auto n = std::make_shared<int>(0);
        auto height = std::make_shared<int>(0);
        auto artin = std::make_shared<int>(0);
        auto twisted = std::make_shared<bool>(false);
        dict->add_option("--n", *n, "dimension of the primitive cohomology")->required();
        auto* h_opt = dict->add_option("--height", *height, "height value");
        auto* a_opt = dict->add_option("--artin", *artin, "Artin invariant value");
        h_opt->excludes(a_opt);
        a_opt->excludes(h_opt);
        dict->add_flag("--twisted", *twisted, "name the stratum in the twisted coset (even n)");
        dict->callback([&, n, height, artin, twisted, h_opt, a_opt] {
            command = "strata dict";
            if (h_opt->count() == 0 && a_opt->count() == 0)
                throw CLI::RequiredError("--height or --artin");
            const bool is_height = h_opt->count() > 0;
            const int value = is_height ? *height : *artin;
            parameters = {{"n", *n}, {"twisted", *twisted},
                          {is_height ? "height" : "artin", value}};
            const StratumDescriptor d = make_descriptor(
                *n, is_height ? InvariantKind::Height : InvariantKind::ArtinInvariant,
                value, *twisted);
            const WeylElement w = final_for_invariant(d);
            result = {{"stratum", json_of(d)},
                      {"window", w.window()},
                      {"family", family_name(w.family())},
                      {"length", length(w)},
                      {"letters", reduced_word(w)}};
            text = stratum_label(d) + " -> " + window_string(w) + "  family " +
                   family_name(w.family()) + "  length " + std::to_string(length(w)) +
                   (d.empty ? "  (empty stratum)" : "");
        });
    }
    {
        auto* poset = strata->add_subcommand("poset", "realized strata in closure order");
        poset->fallthrough();
        auto n = std::make_shared<int>(0);
        poset->add_option("--n", *n, "dimension of the primitive cohomology")->required();
        poset->callback([&, n] {
            command = "strata poset";
            parameters = {{"n", *n}};
            const auto chains = stratum_poset(*n);
            Json jchains = Json::array();
            std::ostringstream os;
            for (const auto& chain : chains) {
                Json jc = Json::array();
                for (size_t i = 0; i < chain.size(); ++i) {
                    jc.push_back(json_of(chain[i]));
                    os << (i ? " > " : "") << stratum_label(chain[i]);
                }
                os << "\n";
                jchains.push_back(std::move(jc));
            }
            result = {{"chains", std::move(jchains)}};
            text = os.str();
        });
    }
    {
        auto* degratio = strata->add_subcommand("degratio", "ratio of neighbouring covering degrees");
        degratio->fallthrough();
        auto m = std::make_shared<int>(0);
        auto i = std::make_shared<int>(0);
        degratio->add_option("--m", *m, "rank")->required();
        degratio->add_option("--i", *i, "chain position, 1 <= i < m")->required();
        degratio->callback([&, m, i] {
            command = "strata degratio";
            parameters = {{"m", *m}, {"i", *i}};
            const RationalPolynomial q = degree_ratio(*m, *i);
            result = {{"coefficients", json_of(q)}, {"rendered", q.to_string()}};
            text = q.to_string();
        });
    }

    // ---- mass ----------------------------------------------------------
    auto* mass = app.add_subcommand("mass", "exact weighted counts");
    mass->fallthrough();
    mass->require_subcommand(1);

    {
        auto* deuring = mass->add_subcommand("deuring", "weighted number of supersingular elliptic curves");
        deuring->fallthrough();
        auto p = std::make_shared<long long>(0);
        deuring->add_option("--p", *p, "odd prime")->required();
        deuring->callback([&, p] {
            command = "mass deuring";
            parameters = {{"p", *p}};
            const Rational v = deuring_mass(*p);
            result = to_string(v);
            text = to_string(v);
        });
    }
    {
        auto* ss = mass->add_subcommand("superspecial", "weighted number of superspecial members");
        ss->fallthrough();
        auto p = std::make_shared<long long>(0);
        auto dprime = std::make_shared<long long>(1);
        auto e8 = std::make_shared<int>(0);
        ss->add_option("--p", *p, "odd prime")->required();
        ss->add_option("--dprime", *dprime, "half the polarization degree")->required();
        ss->add_option("--e8", *e8, "number of E8(-1) summands, 0 or 2")->required();
        ss->callback([&, p, dprime, e8] {
            command = "mass superspecial";
            parameters = {{"p", *p}, {"dprime", *dprime}, {"e8", *e8}};
            const Rational v = superspecial_mass({*p, *dprime, *e8});
            result = to_string(v);
            text = to_string(v);
        });
    }
    {
        auto* zeta = mass->add_subcommand("zeta", "Riemann zeta at a negative odd integer");
        zeta->fallthrough();
        auto j = std::make_shared<int>(0);
        zeta->add_option("--j", *j, "negative odd integer")->required();
        zeta->callback([&, j] {
            command = "mass zeta";
            parameters = {{"j", *j}};
            const Rational v = zeta_negative_odd(*j);
            result = to_string(v);
            text = to_string(v);
        });
    }

    // ---- parse and assemble --------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("k3strat");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out.exit_code = 0;
        out.format = format;
        out.text = app.help();
        out.payload = {{"help", app.help()}, {"version", k3strat_version}};
        return out;
    } catch (const CLI::CallForAllHelp&) {
        out.exit_code = 0;
        out.format = format;
        out.text = app.help("", CLI::AppFormatMode::All);
        out.payload = {{"help", out.text}, {"version", k3strat_version}};
        return out;
    } catch (const CLI::ParseError& e) {
        out.exit_code = 2;
        out.format = format;
        out.text = std::string("usage error: ") + e.what();
        out.payload = {{"error", {{"kind", "usage"}, {"message", e.what()}}},
                       {"version", k3strat_version}};
        return out;
    } catch (const BudgetError& e) {
        out.exit_code = 4;
        out.format = format;
        out.text = std::string("budget error: ") + e.what();
        out.payload = {{"error", {{"kind", "budget"}, {"message", e.what()}}},
                       {"version", k3strat_version}};
        return out;
    } catch (const DomainError& e) {
        out.exit_code = 3;
        out.format = format;
        out.text = std::string("domain error: ") + e.what();
        out.payload = {{"error", {{"kind", "domain"}, {"message", e.what()}}},
                       {"version", k3strat_version}};
        return out;
    } catch (const std::exception& e) {
        out.exit_code = 3;
        out.format = format;
        out.text = std::string("error: ") + e.what();
        out.payload = {{"error", {{"kind", "domain"}, {"message", e.what()}}},
                       {"version", k3strat_version}};
        return out;
    }

    out.exit_code = 0;
    out.format = format;
    out.payload = {{"command", command},
                   {"parameters", parameters},
                   {"result", result},
                   {"version", k3strat_version}};
    out.text = text;
    return out;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const CommandOutcome out = run_command(args);
    std::ostream& os = out.exit_code == 0 ? std::cout : std::cerr;
    if (out.format == "text")
        os << out.text << (out.text.empty() || out.text.back() != '\n' ? "\n" : "");
    else
        os << out.payload.dump(2) << "\n";
    return out.exit_code;
}

}  // namespace k3strat
