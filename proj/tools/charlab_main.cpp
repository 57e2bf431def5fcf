// charlab: exact character-level computations for inductive Lusztig characters,
// Steinberg factorization, eps,t-characters, Drinfeld data, formal group laws,
// and A1 quiver fixed-point combinatorics.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "charlab/drinfeld.hpp"
#include "charlab/io.hpp"
#include "charlab/quiverfix.hpp"
#include "charlab/verify.hpp"

using namespace charlab;

namespace {

int error_exit_code(ErrorCategory cat) {
    switch (cat) {
        case ErrorCategory::Domain: return 3;
        case ErrorCategory::UnsupportedConfiguration: return 4;
        case ErrorCategory::Resource: return 5;
    }
    return 1;
}

void print_error(const Error& e) {
    Json j;
    j["error"]["category"] = e.category_name();
    j["error"]["message"] = e.what();
    if (!e.field().empty()) j["error"]["field"] = e.field();
    std::cerr << j.dump() << "\n";
}

void print_usage_error(const std::string& msg, const std::string& field) {
    Json j;
    j["error"]["category"] = "usage";
    j["error"]["message"] = msg;
    if (!field.empty()) j["error"]["field"] = field;
    std::cerr << j.dump() << "\n";
}

WeightVector parse_weight(const std::string& s) {
    IVec coords;
    std::vector<Int> vals;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw_domain("empty weight coordinate in '" + s + "'", "weight");
            try {
                vals.push_back(std::stoll(cur));
            } catch (...) {
                throw_domain("bad weight coordinate '" + cur + "'", "weight");
            }
            cur.clear();
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            cur.push_back(c);
        } else if (c != ' ') {
            throw_domain("bad character in weight string '" + s + "'", "weight");
        }
    }
    coords.resize(static_cast<Eigen::Index>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) coords[static_cast<Eigen::Index>(i)] = vals[i];
    return WeightVector(coords);
}

std::vector<int> parse_word(const std::string& s) {
    // 1-based generator indices separated by spaces
    std::vector<int> out;
    std::string cur;
    for (char c : s + " ") {
        if (c == ' ') {
            if (cur.empty()) continue;
            int v = std::stoi(cur);
            if (v < 1) throw_domain("generator indices are 1-based", "word");
            out.push_back(v - 1);
            cur.clear();
        } else if (c >= '0' && c <= '9') {
            cur.push_back(c);
        } else {
            throw_domain("bad character in word '" + s + "'", "word");
        }
    }
    return out;
}

E1Source make_source(const RootSystem& R, const std::string& mode, Int p,
                     const std::string& table_path) {
    E1Mode m = e1_mode_from_name(mode);
    if (m == E1Mode::UserTable) {
        if (table_path.empty()) throw_domain("table source needs --e1-table <file>", "e1-table");
        CharacterTableFile t = load_table(table_path);
        if (t.type != R.name()) throw_domain("table type does not match --type", "e1-table");
        if (t.p != p) throw_domain("table p does not match --p", "e1-table");
        return E1Source::with_table(R, p, t.entries);
    }
    return E1Source(R, m, p);
}

void print_character(const Character& c, bool as_json) {
    if (as_json) {
        std::cout << character_to_json(c).dump() << "\n";
        return;
    }
    for (auto& [mu, coeff] : c.terms()) {
        for (Eigen::Index i = 0; i < mu.coords.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << mu.coords[i];
        }
        std::cout << "  " << coeff << "\n";
    }
}

std::string cache_dir() {
    const char* env = std::getenv("CHARLAB_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character computations at a root of unity"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of tables");

    // weyl-char
    auto* wc = app.add_subcommand("weyl-char", "Weyl character of an irreducible module");
    std::string wc_type = "A1", wc_weight = "0";
    wc->add_option("--type", wc_type, "root system, e.g. A2");
    wc->add_option("--weight", wc_weight, "dominant weight, comma-separated");

    // lusztig-e
    auto* le = app.add_subcommand("lusztig-e", "inductive level-n character E^n_lambda");
    std::string le_type = "A1", le_weight = "0", le_source = "sl2", le_table, le_save;
    Int le_p = 3;
    int le_level = 1;
    le->add_option("--type", le_type, "root system");
    le->add_option("--p", le_p, "prime");
    le->add_option("--weight", le_weight, "dominant weight");
    le->add_option("--level", le_level, "level n >= 0");
    le->add_option("--e1-source", le_source, "sl2 | lowest-alcove | kl | table");
    le->add_option("--e1-table", le_table, "character table file for the table source");
    le->add_option("--save-table", le_save, "write the computed character table to a file");

    // steinberg-sweep
    auto* sb = app.add_subcommand("steinberg-sweep", "check the Steinberg factorization on a sweep");
    std::string sb_type = "A1", sb_source = "sl2", sb_table;
    Int sb_p = 3, sb_max = 30;
    int sb_level = 1;
    sb->add_option("--type", sb_type, "root system");
    sb->add_option("--p", sb_p, "prime");
    sb->add_option("--max-weight", sb_max, "sweep 1..max (coordinate sum for rank > 1)");
    sb->add_option("--level", sb_level, "level n >= 1");
    sb->add_option("--e1-source", sb_source, "sl2 | lowest-alcove | kl | table");
    sb->add_option("--e1-table", sb_table, "character table file for the table source");

    // stabilization
    auto* st = app.add_subcommand("stabilization", "E^1 = E^2 = ... = E^nmax on the reduced region");
    std::string st_type = "A1", st_weight = "0", st_source = "sl2", st_table;
    Int st_p = 3;
    int st_nmax = 3;
    st->add_option("--type", st_type, "root system");
    st->add_option("--p", st_p, "prime");
    st->add_option("--weight", st_weight, "reduced-region weight");
    st->add_option("--n-max", st_nmax, "highest level to compare");
    st->add_option("--e1-source", st_source, "sl2 | lowest-alcove | kl | table");
    st->add_option("--e1-table", st_table, "character table file for the table source");

    // kl
    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
    std::string kl_cox = "A3", kl_x, kl_w, kl_cache;
    int kl_cap = 14;
    kl->add_option("--coxeter", kl_cox, "presentation name, e.g. A3 or A1~");
    kl->add_option("--x", kl_x, "reduced word for x, 1-based generators");
    kl->add_option("--w", kl_w, "reduced word for w, 1-based generators");
    kl->add_option("--length-cap", kl_cap, "hard cap on l(w)");
    kl->add_option("--cache", kl_cache, "on-disk cache file (default from CHARLAB_CACHE_DIR)");

    // drinfeld
    auto* dr = app.add_subcommand("drinfeld", "type-A Drinfeld exponent strings");
    int dr_n = 2;
    std::string dr_weight = "0,0", dr_sign = "+", dr_pairing = "printed";
    Int dr_p = 0;
    bool dr_gamma = false, dr_eval = false;
    dr->add_option("--n", dr_n, "rank of sl_{n+1}");
    dr->add_option("--weight", dr_weight, "dominant weight");
    dr->add_option("--sign", dr_sign, "+ or -");
    dr->add_option("--p", dr_p, "prime (required for gamma)");
    dr->add_flag("--gamma", dr_gamma, "emit gamma exponent data (needs --p)");
    dr->add_flag("--eval-point", dr_eval, "emit the evaluation point");
    dr->add_option("--lambda-pairing", dr_pairing, "printed | cross (eval-point variant)");

    // qchar
    auto* qc = app.add_subcommand("qchar", "level-n eps,t-character assembly");
    std::string qc_type = "A1", qc_weight = "0", qc_emit = "eps-t";
    Int qc_p = 2;
    int qc_level = 1;
    qc->add_option("--type", qc_type, "root system (A1 for string digits)");
    qc->add_option("--p", qc_p, "prime");
    qc->add_option("--level", qc_level, "level n");
    qc->add_option("--weight", qc_weight, "dominant weight");
    qc->add_option("--emit", qc_emit, "eps-t | collapsed");

    // fgl
    auto* fg = app.add_subcommand("fgl", "formal group law computations");
    fg->require_subcommand(1);
    auto* fg_ps = fg->add_subcommand("p-series", "[p]x of a law");
    auto* fg_to = fg->add_subcommand("torsion", "count the p-torsion of a law");
    std::string fgl_law = "multiplicative", fgl_ring = "Z";
    Int fgl_p = 3;
    int fgl_order = 10, fgl_height = 1, fgl_prec = 6;
    for (auto* sub : {fg_ps, fg_to}) {
        sub->add_option("--law", fgl_law, "additive | multiplicative | honda");
        sub->add_option("--p", fgl_p, "prime");
        sub->add_option("--order", fgl_order, "truncation order");
        sub->add_option("--ring", fgl_ring, "Z | Q | Zp | cyclotomic | Qzeta");
        sub->add_option("--height", fgl_height, "Honda height");
        sub->add_option("--prec", fgl_prec, "Z_p precision");
    }

    // quiverfix
    auto* qf = app.add_subcommand("quiverfix", "A1 quiver fixed-point combinatorics");
    Int qf_w = 4, qf_p = 2;
    std::string qf_emit = "components";
    qf->add_option("--w", qf_w, "total framing dimension");
    qf->add_option("--p", qf_p, "prime, must divide w");
    qf->add_option("--emit", qf_emit, "components | poincare | verify");

    // verify
    auto* vf = app.add_subcommand("verify", "run the acceptance suite");
    std::string vf_scale = "full-desk";
    std::uint64_t vf_seed = 12345;
    vf->add_option("--scale", vf_scale, "small | full-desk");
    vf->add_option("--seed", vf_seed, "seed for the randomized criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        print_usage_error(e.what(), "");
        return 2;
    }

    try {
        if (*wc) {
            auto R = RootSystem::from_name(wc_type);
            WeightVector lam = parse_weight(wc_weight);
            if (lam.rank() != R.rank()) throw_domain("weight rank does not match type", "weight");
            print_character(weyl_character(R, lam), as_json);
            return 0;
        }
        if (*le) {
            auto R = RootSystem::from_name(le_type);
            WeightVector lam = parse_weight(le_weight);
            if (lam.rank() != R.rank()) throw_domain("weight rank does not match type", "weight");
            E1Source src = make_source(R, le_source, le_p, le_table);
            LevelCharacter lc = e_n(src, lam, le_level);
            if (!le_save.empty()) {
                CharacterTableFile t;
                t.type = R.name();
                t.p = le_p;
                t.level = le_level;
                t.e1_source = le_source;
                t.entries[lam] = lc.character;
                save_table(t, le_save);
            }
            if (as_json) {
                Json j;
                j["schema_version"] = kSchemaVersion;
                j["type"] = R.name();
                j["p"] = le_p;
                j["level"] = le_level;
                j["e1_source"] = le_source;
                j["lambda"] = weight_to_json(lam);
                j["character"] = character_to_json(lc.character);
                std::cout << j.dump() << "\n";
            } else {
                print_character(lc.character, false);
            }
            return 0;
        }
        if (*sb) {
            auto R = RootSystem::from_name(sb_type);
            E1Source src = make_source(R, sb_source, sb_p, sb_table);
            Int pass = 0, total = 0;
            std::vector<std::string> failures;
            std::vector<WeightVector> sweep;
            if (R.rank() == 1) {
                for (Int w = 1; w <= sb_max; ++w)
                    sweep.push_back(WeightVector(IVec(IVec::Constant(1, w))));
            } else {
                IVec c = IVec::Zero(R.rank());
                while (true) {
                    if (c.sum() >= 1 && c.sum() <= sb_max) sweep.emplace_back(c);
                    int k = 0;
                    while (k < R.rank()) {
                        if (++c[k] <= sb_max) break;
                        c[k] = 0;
                        ++k;
                    }
                    if (k == R.rank()) break;
                }
            }
            for (auto& w : sweep) {
                ++total;
                if (steinberg_check(src, w, sb_level).equal) ++pass;
                else failures.push_back(w.str());
            }
            if (as_json) {
                Json j;
                j["pass"] = pass;
                j["total"] = total;
                j["failures"] = failures;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << pass << "/" << total << " pass\n";
                for (auto& f : failures) std::cout << "FAIL " << f << "\n";
            }
            return failures.empty() ? 0 : 1;
        }
        if (*st) {
            auto R = RootSystem::from_name(st_type);
            WeightVector lam = parse_weight(st_weight);
            E1Source src = make_source(R, st_source, st_p, st_table);
            bool ok = stabilization_check(src, lam, st_nmax);
            if (as_json) {
                Json j;
                j["stable"] = ok;
                j["n_max"] = st_nmax;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (ok ? "stable" : "UNSTABLE") << " through level " << st_nmax << "\n";
            }
            return ok ? 0 : 1;
        }
        if (*kl) {
            auto P = CoxeterPresentation::from_name(kl_cox);
            CoxeterElement x = CoxeterElement::from_word(P, parse_word(kl_x));
            CoxeterElement w = CoxeterElement::from_word(P, parse_word(kl_w));
            KLContext ctx(P, kl_cap);
            std::string cache = kl_cache;
            if (cache.empty() && !cache_dir().empty())
                cache = cache_dir() + "/kl-" + kl_cox + ".bin";
            if (!cache.empty()) ctx.load_cache(cache);
            KLPolynomial p = ctx.kl_polynomial(x, w);
            if (!cache.empty()) ctx.save_cache(cache);
            if (as_json) {
                std::cout << kl_to_json(p).dump() << "\n";
            } else if (p.is_zero()) {
                std::cout << "0\n";
            } else {
                for (int k = 0; k <= p.degree(); ++k) {
                    if (k) std::cout << " ";
                    std::cout << p.coeff(k);
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (*dr) {
            WeightVector lam = parse_weight(dr_weight);
            int sign = (dr_sign == "-") ? -1 : +1;
            auto d = drinfeld_polynomials(dr_n, lam, sign);
            Json j;
            if (dr_gamma) {
                if (dr_p < 2) throw_domain("--gamma needs --p", "p");
                auto g = gamma_from_drinfeld(d, dr_p);
                for (size_t i = 0; i < g.exponents.size(); ++i)
                    j[std::to_string(i + 1)] = g.exponents[i];
            } else if (dr_eval) {
                LambdaPairing pairing =
                    dr_pairing == "cross" ? LambdaPairing::Cross : LambdaPairing::AsPrinted;
                auto pt = eval_point(dr_n, lam, sign, pairing,
                                     dr_p >= 2 ? std::optional<Int>(dr_p) : std::nullopt);
                j["eval_point"] = pt.str();
            } else {
                for (size_t i = 0; i < d.exponents.size(); ++i)
                    j[std::to_string(i + 1)] = d.exponents[i];
            }
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*qc) {
            auto R = RootSystem::from_name(qc_type);
            WeightVector lam = parse_weight(qc_weight);
            if (lam.rank() != R.rank()) throw_domain("weight rank does not match type", "weight");
            auto digits = p_adic_decompose(lam, qc_p);
            std::vector<WeightVector> head;
            WeightVector tail(IVec(IVec::Zero(R.rank())));
            Int f = 1;
            for (int i = 0; i < qc_level; ++i)
                head.push_back(i < static_cast<int>(digits.size()) ? digits[static_cast<size_t>(i)]
                                                                   : tail);
            for (std::size_t j = static_cast<size_t>(qc_level); j < digits.size(); ++j) {
                tail = tail + f * digits[j];
                f *= qc_p;
            }
            EpsTChar hat = assemble_ch_et(R, head, tail, qc_p, qc_level);
            if (qc_emit == "collapsed") {
                print_character(pi_collapse(hat, R), as_json);
            } else if (qc_emit == "eps-t") {
                std::cout << eps_to_json(hat).dump() << "\n";
            } else {
                throw_domain("--emit must be eps-t or collapsed", "emit");
            }
            return 0;
        }
        if (*fg) {
            Ring ring = Ring::integers();
            if (fgl_ring == "Z") ring = Ring::integers();
            else if (fgl_ring == "Q") ring = Ring::rationals();
            else if (fgl_ring == "Zp") ring = Ring::p_adics(fgl_p, fgl_prec);
            else if (fgl_ring == "cyclotomic") ring = Ring::cyclotomic(fgl_p);
            else if (fgl_ring == "Qzeta") ring = Ring::q_cyclotomic(fgl_p);
            else throw_domain("unknown ring '" + fgl_ring + "'", "ring");
            FormalGroupLaw law = [&]() {
                if (fgl_law == "additive") return FormalGroupLaw::additive(ring, fgl_order);
                if (fgl_law == "multiplicative")
                    return FormalGroupLaw::multiplicative(ring, fgl_order);
                if (fgl_law == "honda")
                    return FormalGroupLaw::honda(ring, fgl_p, fgl_height, fgl_order);
                throw_domain("unknown law '" + fgl_law + "'", "law");
            }();
            if (*fg_ps) {
                std::cout << series_to_json(p_series(law, fgl_p)).dump() << "\n";
            } else {
                auto t = torsion_count(law, fgl_p);
                Json j;
                j["count"] = t.count;
                if (t.weierstrass_degree >= 0) j["weierstrass_degree"] = t.weierstrass_degree;
                Json roots = Json::array();
                for (auto& r : t.roots) roots.push_back(r.str());
                j["roots"] = std::move(roots);
                std::cout << j.dump() << "\n";
            }
            return 0;
        }
        if (*qf) {
            if (qf_emit == "components") {
                auto comps = enumerate_components(qf_w, qf_p);
                Json arr = Json::array();
                for (auto& d : comps) {
                    Json e;
                    e["v"] = d.v;
                    e["w"] = d.w;
                    e["even"] = d.even;
                    e["fiber_rank"] = d.fiber_rank;
                    arr.push_back(std::move(e));
                }
                std::cout << arr.dump() << "\n";
            } else if (qf_emit == "poincare") {
                auto comps = enumerate_components(qf_w, qf_p);
                Json arr = Json::array();
                for (auto& d : comps) {
                    Json e;
                    e["v"] = d.v;
                    e["poincare"] = poincare_polynomial(d).coeffs();
                    e["fiber_rank"] = d.fiber_rank;
                    arr.push_back(std::move(e));
                }
                std::cout << arr.dump() << "\n";
            } else if (qf_emit == "verify") {
                auto rep = verify_A1_even_iso(qf_w, qf_p);
                Json j;
                j["ok"] = rep.ok;
                Json pairs = Json::array();
                for (auto& pr : rep.pairs) {
                    Json e;
                    e["v"] = pr.v;
                    e["poincare"] = pr.lhs.coeffs();
                    e["fiber_lhs"] = pr.lhs_fiber;
                    e["fiber_rhs"] = pr.rhs_fiber;
                    pairs.push_back(std::move(e));
                }
                j["pairs"] = std::move(pairs);
                std::cout << j.dump() << "\n";
                return rep.ok ? 0 : 1;
            } else {
                throw_domain("--emit must be components, poincare, or verify", "emit");
            }
            return 0;
        }
        if (*vf) {
            bool full = vf_scale != "small";
            if (vf_scale != "small" && vf_scale != "full-desk")
                throw_domain("--scale must be small or full-desk", "scale");
            VerifyReport report = verify_all(full, vf_seed);
            if (as_json) {
                Json arr = Json::array();
                for (auto& r : report.results) {
                    Json e;
                    e["id"] = r.id;
                    e["name"] = r.name;
                    e["pass"] = r.pass;
                    e["detail"] = r.detail;
                    e["seconds"] = r.seconds;
                    e["limit_seconds"] = r.limit_seconds;
                    arr.push_back(std::move(e));
                }
                Json j;
                j["all_pass"] = report.all_pass;
                j["criteria"] = std::move(arr);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << format_report(report);
            }
            return report.all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        print_error(e);
        return error_exit_code(e.category());
    } catch (const std::exception& e) {
        print_usage_error(e.what(), "");
        return 2;
    }
    return 0;
}
