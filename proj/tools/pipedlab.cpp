// pipedlab: exact-arithmetic toolkit for Diophantine parallelepipeds.
//
// Exit codes: 0 success, 1 domain error (invalid sextuple or parameters),
// 2 usage error, 3 verification failure.

#include "pipedlab/pipedlab.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace pipedlab;

struct CliError {
    int code;
    std::string message;
};

BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw CliError{2, "empty integer argument"};
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw CliError{2, "malformed integer " + s};
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw CliError{2, "malformed integer " + s};
    return BigInt(s);
}

EdgeSextuple parse_sextuple(const std::vector<std::string>& args) {
    std::array<BigInt, 6> e;
    for (size_t i = 0; i < 6; ++i) e[i] = parse_bigint(args[i]);
    return EdgeSextuple{e[0], e[1], e[2], e[3], e[4], e[5]};
}

SearchRecord analyze_record(const EdgeSextuple& edges) {
    SearchRecord rec;
    rec.edges = edges;
    ComponentSignature sig = compute_signature(edges);
    rec.cls = classify(sign_vector(gram_from_edges(edges)));
    rec.sig = to_string(sig);
    rec.category = category_of(sig);
    rec.volume_squared = volume_squared(gram_from_edges(edges));
    return rec;
}

void print_analysis_table(const SearchRecord& rec, bool perfect) {
    const CategoryKey& k = rec.category;
    std::cout << "edges        " << rec.edges.str() << "\n";
    std::cout << "class        " << class_name(rec.cls) << "\n";
    std::cout << "perfect      " << (perfect ? "yes" : "no") << "\n";
    std::cout << "signature    " << rec.sig << "\n";
    std::cout << "skew         " << k.skew << "/4\n";
    std::cout << "face diag    " << k.face_diag << "/6\n";
    std::cout << "body diag    " << k.body_diag << "/4\n";
    std::cout << "face area    " << k.face_area << "/3\n";
    std::cout << "body area    " << k.body_area << "/6\n";
    std::cout << "vol flag     " << k.volume << "\n";
    std::cout << "volume^2     " << to_string(rec.volume_squared) << "\n";
    if (auto v = sqrt_rational(rec.volume_squared))
        std::cout << "volume       " << to_string(*v) << "\n";
}

void print_analysis_csv(const SearchRecord& rec) {
    const CategoryKey& k = rec.category;
    std::cout << "a,b,c,d,e,f,class,sig,skew,face,body,farea,barea,vol,vol2\n";
    std::cout << rec.edges.a << "," << rec.edges.b << "," << rec.edges.c << ","
              << rec.edges.d << "," << rec.edges.e << "," << rec.edges.f << ","
              << class_name(rec.cls) << "," << rec.sig << "," << k.skew << ","
              << k.face_diag << "," << k.body_diag << "," << k.face_area << ","
              << k.body_area << "," << k.volume << ","
              << to_string(rec.volume_squared) << "\n";
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact rationality analysis of integer parallelepipeds"};
    app.require_subcommand(1);
    app.set_config("--config");
    bool json = false, csv = false;
    app.add_flag("--json", json, "JSON output")->group("");
    app.add_flag("--csv", csv, "CSV output")->group("");

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "class, 27-component signature and volume of a sextuple");
    std::vector<std::string> analyze_edges;
    analyze->add_option("edges", analyze_edges, "a b c d e f")->expected(6);
    bool analyze_json = false, analyze_csv = false;
    analyze->add_flag("--json", analyze_json, "emit one JSON record");
    analyze->add_flag("--csv", analyze_csv, "emit one CSV row");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "orthogonality class of a sextuple");
    std::vector<std::string> classify_edges;
    classify_cmd->add_option("edges", classify_edges, "a b c d e f")->expected(6);

    // family
    auto* family_cmd = app.add_subcommand(
        "family", "members of the tetrahedron family of a sextuple");
    std::vector<std::string> family_edges;
    family_cmd->add_option("edges", family_edges, "a b c d e f")->expected(6);
    bool family_json = false;
    family_cmd->add_flag("--json", family_json, "one JSON array per line");

    // embed
    auto* embed_cmd = app.add_subcommand(
        "embed", "floating-point vertex coordinates (z >= 0 branch)");
    std::vector<std::string> embed_edges;
    embed_cmd->add_option("edges", embed_edges, "a b c d e f")->expected(6);

    // param-heron
    auto* heron_cmd = app.add_subcommand(
        "param-heron", "parametric Heron triangles (CSV: m,n,p,q,a,b,c,area)");
    std::vector<std::string> heron_params;
    heron_cmd->add_option("params", heron_params, "m n p q")->expected(-1);
    std::int64_t heron_limit = 0;
    heron_cmd->add_option("--limit", heron_limit,
                          "emit the first N in-domain tuples of the sweep");

    // param-wyss
    auto* wyss_cmd = app.add_subcommand(
        "param-wyss",
        "parametric two-rational-diagonal parallelograms (CSV rows)");
    std::vector<std::string> wyss_params;
    wyss_cmd->add_option("params", wyss_params, "k m n p q")->expected(-1);
    std::int64_t wyss_limit = 0;
    wyss_cmd->add_option("--limit", wyss_limit,
                         "emit the first N in-domain tuples of the sweep");

    // parallelograms
    auto* para_cmd = app.add_subcommand(
        "parallelograms",
        "integer parallelograms with two rational diagonals (case 3 or 6)");
    int para_case = 3;
    std::int64_t para_bound = 25;
    std::int64_t para_limit = 0;
    para_cmd->add_option("--case", para_case, "3 or 6")
        ->required()
        ->check(CLI::IsMember({3, 6}));
    para_cmd->add_option("--bound", para_bound, "max side length");
    para_cmd->add_option("--limit", para_limit, "emit at most N rows");

    // stats
    auto* stats_cmd = app.add_subcommand(
        "stats", "parallelogram rationality-case tallies over a bounded sweep");
    std::int64_t stats_max_a = 100;
    stats_cmd->add_option("--max-a", stats_max_a, "side bound (default 100)");
    bool stats_csv = false, stats_json = false;
    stats_cmd->add_flag("--csv", stats_csv, "CSV output");
    stats_cmd->add_flag("--json", stats_json, "JSON output");

    // search
    auto* search_cmd = app.add_subcommand(
        "search", "bounded survey of assembled integer parallelepipeds");
    SearchConfig cfg;
    std::string search_class;
    search_cmd->add_option("--max-basis", cfg.max_basis, "basis length bound")
        ->required();
    search_cmd->add_flag("--perfect", cfg.perfect_only,
                         "keep only perfect pipeds");
    search_cmd->add_option("--class", search_class, "keep only one class");
    search_cmd->add_flag("--rational-volume", cfg.rational_volume_only,
                         "keep only rational-volume pipeds");
    search_cmd->add_option("--out", cfg.out_path, "records JSONL path");
    search_cmd->add_option("--checkpoint", cfg.checkpoint_path,
                           "checkpoint file path");
    search_cmd->add_flag("--resume", cfg.resume, "resume from checkpoint");
    search_cmd->add_option("--checkpoint-interval", cfg.checkpoint_interval,
                           "units between checkpoints");
    bool search_csv = false, search_json = false;
    search_cmd->add_flag("--csv", search_csv, "CSV histogram output");
    search_cmd->add_flag("--json", search_json, "JSON summary output");

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "run the fixture corpus regression (exit 3 on failure)");
    std::string fixtures = "data/corpus.csv";
    verify_cmd->add_option("--fixtures", fixtures, "fixture CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (analyze->parsed()) {
        SearchRecord rec = analyze_record(parse_sextuple(analyze_edges));
        bool perfect = is_perfect(*signature_from_string(rec.sig));
        if (analyze_json || json)
            std::cout << record_to_json(rec) << "\n";
        else if (analyze_csv || csv)
            print_analysis_csv(rec);
        else
            print_analysis_table(rec, perfect);
        return 0;
    }

    if (classify_cmd->parsed()) {
        EdgeSextuple edges = parse_sextuple(classify_edges);
        SignVector sv = sign_vector(gram_from_edges(edges));
        std::cout << class_name(classify(sv)) << "  sign-vector (" << sv.s_ab
                  << "," << sv.s_ac << "," << sv.s_bc << ")\n";
        return 0;
    }

    if (family_cmd->parsed()) {
        TetraFamily fam = tetra_family(parse_sextuple(family_edges));
        for (const EdgeSextuple& m : fam.members) {
            if (family_json)
                std::cout << "[" << m.a << "," << m.b << "," << m.c << ","
                          << m.d << "," << m.e << "," << m.f << "]\n";
            else
                std::cout << m.a << " " << m.b << " " << m.c << " " << m.d
                          << " " << m.e << " " << m.f << "\n";
        }
        if (!family_json)
            std::cerr << fam.members.size() << " members, "
                      << fam.excluded_rows << " of 24 rows excluded\n";
        return 0;
    }

    if (embed_cmd->parsed()) {
        CoordinateEmbedding emb =
            embed_coordinates(parse_sextuple(embed_edges));
        for (int i = 1; i <= 8; ++i) {
            auto p = emb.piped_vertex(i);
            std::cout << "v" << i << " " << fmt_double(p[0]) << " "
                      << fmt_double(p[1]) << " " << fmt_double(p[2]) << "\n";
        }
        return 0;
    }

    if (heron_cmd->parsed()) {
        std::cout << "m,n,p,q,a,b,c,area\n";
        auto emit = [&](const HeronParams& hp) {
            HeronTriangle t = heron_triangle(hp);
            auto area = sqrt_rational(t.area_squared);
            std::cout << hp.m << "," << hp.n << "," << hp.p << "," << hp.q
                      << "," << t.a << "," << t.b << "," << t.c << ","
                      << to_string(*area) << "\n";
        };
        if (!heron_params.empty()) {
            if (heron_params.size() != 4)
                throw CliError{2, "param-heron needs exactly m n p q"};
            emit(HeronParams{parse_bigint(heron_params[0]),
                             parse_bigint(heron_params[1]),
                             parse_bigint(heron_params[2]),
                             parse_bigint(heron_params[3])});
        } else {
            if (heron_limit <= 0)
                throw CliError{2, "param-heron needs m n p q or --limit N"};
            for (const HeronParams& hp :
                 heron_in_domain_sweep(static_cast<std::size_t>(heron_limit)))
                emit(hp);
        }
        return 0;
    }

    if (wyss_cmd->parsed()) {
        std::cout << "k,m,n,p,q,a,b,d1,d2,area,case\n";
        auto emit = [&](const WyssParams& wp) {
            ParallelogramSpec p = wyss_parallelogram(wp);
            auto d2 = sqrt_rational(p.diag2_squared);
            auto area = sqrt_rational(p.area_squared);
            std::cout << wp.k << "," << wp.m << "," << wp.n << "," << wp.p
                      << "," << wp.q << "," << p.side_a << "," << p.side_b
                      << "," << p.diag1 << "," << to_string(*d2) << ","
                      << (area ? to_string(*area) : "") << ","
                      << (area ? 6 : 3) << "\n";
        };
        if (!wyss_params.empty()) {
            if (wyss_params.size() != 5)
                throw CliError{2, "param-wyss needs exactly k m n p q"};
            emit(WyssParams{parse_bigint(wyss_params[0]),
                            parse_bigint(wyss_params[1]),
                            parse_bigint(wyss_params[2]),
                            parse_bigint(wyss_params[3]),
                            parse_bigint(wyss_params[4])});
        } else {
            if (wyss_limit <= 0)
                throw CliError{2, "param-wyss needs k m n p q or --limit N"};
            for (const WyssParams& wp :
                 wyss_in_domain_sweep(static_cast<std::size_t>(wyss_limit)))
                emit(wp);
        }
        return 0;
    }

    if (para_cmd->parsed()) {
        auto rows = smallest_parallelograms(para_case, para_bound);
        std::cout << "a,b,d1,d2,area,case\n";
        std::int64_t emitted = 0;
        for (const auto& r : rows) {
            ParallelogramCase pc =
                classify_parallelogram(BigInt(r.a), BigInt(r.b), BigInt(r.d1));
            std::string area;
            if (pc == ParallelogramCase::case6) {
                auto sq = sqrt_rational(
                    make_parallelogram(BigInt(r.a), BigInt(r.b), BigInt(r.d1))
                        .area_squared);
                area = to_string(*sq);
            }
            std::cout << r.a << "," << r.b << "," << r.d1 << "," << r.d2 << ","
                      << area << "," << case_number(pc) << "\n";
            if (para_limit > 0 && ++emitted >= para_limit) break;
        }
        return 0;
    }

    if (stats_cmd->parsed()) {
        ParallelogramStats st = enumerate_parallelogram_stats(stats_max_a);
        if (stats_json || json) {
            std::cout << "{\"max_a\":" << stats_max_a << ",\"case2\":"
                      << st.case2 << ",\"case5\":" << st.case5 << ",\"case3\":"
                      << st.case3 << ",\"case6\":" << st.case6
                      << ",\"case6_right\":" << st.case6_right
                      << ",\"case6_scalene\":" << st.case6_scalene
                      << ",\"total\":" << st.total << "}\n";
            return 0;
        }
        if (stats_csv || csv) {
            std::cout << "case,count\n";
            std::cout << "case2," << st.case2 << "\n";
            std::cout << "case5," << st.case5 << "\n";
            std::cout << "case3," << st.case3 << "\n";
            std::cout << "case6," << st.case6 << "\n";
            std::cout << "case6_right," << st.case6_right << "\n";
            std::cout << "case6_scalene," << st.case6_scalene << "\n";
            std::cout << "total," << st.total << "\n";
            return 0;
        }
        const bool reference = (stats_max_a == 100);
        std::cout << "case    computed";
        if (reference) std::cout << "   reference(746,344-triple run)";
        std::cout << "\n";
        auto row = [&](const char* name, std::uint64_t got, const char* ref) {
            std::cout << name << "  " << got;
            if (reference) std::cout << "   " << ref;
            std::cout << "\n";
        };
        row("case2 ", st.case2, "737628");
        row("case5 ", st.case5, "1827");
        row("case3 ", st.case3, "6683");
        row("case6 ", st.case6, "206");
        row("right ", st.case6_right, "63");
        row("other ", st.case6_scalene, "143");
        row("total ", st.total, "746344");
        return 0;
    }

    if (search_cmd->parsed()) {
        if (!search_class.empty()) {
            auto cls = class_from_name(search_class);
            if (!cls) throw CliError{2, "unknown class " + search_class};
            cfg.class_filter = cls;
        }
        SurveyResult res = run_survey(cfg);
        if (search_json || json) {
            std::cout << "{\"max_basis\":" << cfg.max_basis << ",\"combos\":"
                      << res.combos << ",\"records\":" << res.records.size()
                      << ",\"classes\":{";
            bool first = true;
            for (const auto& [cls, n] : res.class_tally) {
                std::cout << (first ? "" : ",") << "\"" << class_name(cls)
                          << "\":" << n;
                first = false;
            }
            std::cout << "}}\n";
            return 0;
        }
        std::cout << "combos " << res.combos << "\n";
        std::cout << "records " << res.records.size() << "\n";
        for (const auto& [cls, n] : res.class_tally)
            std::cout << class_name(cls) << " " << n << "\n";
        if (search_csv || csv) {
            write_category_csv(std::cout, res.category_tally);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        auto rows = load_fixtures(fixtures);
        VerifyReport report = verify_corpus(rows);
        for (const auto& f : report.failures) std::cout << "FAIL " << f << "\n";
        std::cout << report.passed << " checks passed, " << report.failed
                  << " failed (" << rows.size() << " fixture rows)\n";
        return report.ok() ? 0 : 3;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const pipedlab::invalid_tetrahedron& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
