#pragma once

// Fixture corpus: machine-readable transcription of the reference example
// tables, used as the regression gate. Each block of rows is introduced by
// a '# <caption>' line naming its source table; rows compare per-group
// rational counts (never raw bit positions), the class label, and the exact
// volume where one is stated. Rows with no expectations assert only that the
// sextuple is a valid nondegenerate integer tetrahedron. A class field of
// "invalid" asserts the opposite: the printed edge data admits no Euclidean
// tetrahedron (negative Gram determinant) and must be rejected.

#include "pipedlab/classify.hpp"
#include "pipedlab/signature.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace pipedlab {

struct FixtureRow {
    EdgeSextuple edges;
    std::optional<PipedClass> cls;
    std::optional<CategoryKey> counts;
    std::optional<BigInt> volume;  // exact volume; 0 for flagged-degenerate
    bool expect_invalid = false;   // printed row admits no tetrahedron
    std::string source;            // table caption, quoted verbatim
    int line = 0;
};

inline constexpr const char* kFixtureHeader =
    "a,b,c,d,e,f,class,skew,face,body,farea,barea,vol,volume";

inline std::vector<FixtureRow> load_fixtures(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open fixture file " + path);
    std::vector<FixtureRow> rows;
    std::string line, caption;
    bool header_seen = false;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                                 msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            caption = line.substr(line.find_first_not_of("# "));
            continue;
        }
        if (!header_seen) {
            if (line != kFixtureHeader) fail("expected header line");
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        while (cells.size() < 14) cells.push_back("");
        if (cells.size() != 14) fail("expected 14 columns");

        FixtureRow row;
        row.line = lineno;
        row.source = caption;
        for (int i = 0; i < 6; ++i)
            if (cells[static_cast<size_t>(i)].empty()) fail("missing edge");
        try {
            std::array<BigInt, 6> e;
            for (int i = 0; i < 6; ++i)
                e[static_cast<size_t>(i)] = BigInt(cells[static_cast<size_t>(i)]);
            row.edges = EdgeSextuple{e[0], e[1], e[2], e[3], e[4], e[5]};
        } catch (const std::exception&) {
            fail("unparsable edge value");
        }
        if (cells[6] == "invalid") {
            row.expect_invalid = true;
        } else if (!cells[6].empty()) {
            auto cls = class_from_name(cells[6]);
            if (!cls) fail("unknown class label '" + cells[6] + "'");
            row.cls = cls;
        }
        const bool any_count = !cells[7].empty();
        for (int i = 7; i <= 12; ++i)
            if (cells[static_cast<size_t>(i)].empty() != !any_count)
                fail("count columns must be all present or all absent");
        if (any_count) {
            try {
                row.counts = CategoryKey{
                    std::stoi(cells[7]),  std::stoi(cells[8]),
                    std::stoi(cells[9]),  std::stoi(cells[10]),
                    std::stoi(cells[11]), std::stoi(cells[12])};
            } catch (const std::exception&) {
                fail("unparsable count value");
            }
        }
        if (!cells[13].empty()) {
            try {
                row.volume = BigInt(cells[13]);
            } catch (const std::exception&) {
                fail("unparsable volume value");
            }
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw std::runtime_error(path + ": empty fixture file");
    return rows;
}

// Parallelogram listing fixtures: blocks of (a, b, d1, d2) rows keyed by the
// source table caption.
struct ParallelogramFixture {
    std::int64_t a, b, d1, d2;
    std::string source;
    int line = 0;
};

inline std::vector<ParallelogramFixture> load_parallelogram_fixtures(
    const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open fixture file " + path);
    std::vector<ParallelogramFixture> rows;
    std::string line, caption;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            caption = line.substr(line.find_first_not_of("# "));
            continue;
        }
        if (!header_seen) {
            if (line != "a,b,d1,d2")
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": expected header line");
            header_seen = true;
            continue;
        }
        ParallelogramFixture row;
        row.source = caption;
        row.line = lineno;
        std::array<std::int64_t, 4> vals{};
        size_t count = 0;
        std::istringstream ls(line);
        std::string cell;
        try {
            while (std::getline(ls, cell, ',') && count < 4)
                vals[count++] = std::stoll(cell);
        } catch (const std::exception&) {
            count = 0;
        }
        if (count != 4)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 4 integer columns");
        row.a = vals[0];
        row.b = vals[1];
        row.d1 = vals[2];
        row.d2 = vals[3];
        rows.push_back(std::move(row));
    }
    return rows;
}

struct VerifyReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // one message per failing check
    bool ok() const { return failed == 0; }
};

inline VerifyReport verify_corpus(const std::vector<FixtureRow>& rows) {
    VerifyReport report;
    auto check = [&](const FixtureRow& row, bool cond, const std::string& msg) {
        if (cond) {
            ++report.passed;
        } else {
            ++report.failed;
            report.failures.push_back("line " + std::to_string(row.line) +
                                      " " + row.edges.str() + " [" +
                                      row.source + "]: " + msg);
        }
    };
    for (const FixtureRow& row : rows) {
        if (row.expect_invalid) {
            bool rejected = !faces_valid(row.edges) ||
                            det8_core(gram_core(row.edges)) < 0;
            check(row, rejected, "expected non-embeddable edge data");
            continue;
        }
        ComponentSignature sig;
        PipedClass cls;
        try {
            sig = compute_signature(row.edges);
            cls = classify(sign_vector(gram_from_edges(row.edges)));
        } catch (const std::exception& ex) {
            check(row, false, std::string("rejected: ") + ex.what());
            continue;
        }
        if (!row.cls && !row.counts && !row.volume) {
            // validity-only row: a nondegenerate integer tetrahedron
            check(row, sig.volume != -1, "expected nonzero volume");
            continue;
        }
        if (row.cls)
            check(row, cls == *row.cls,
                  "class " + std::string(class_name(cls)) + " != expected " +
                      std::string(class_name(*row.cls)));
        if (row.counts) {
            CategoryKey got = category_of(sig);
            auto fmt = [](const CategoryKey& k) {
                std::ostringstream os;
                os << k.skew << "," << k.face_diag << "," << k.body_diag << ","
                   << k.face_area << "," << k.body_area << "," << k.volume;
                return os.str();
            };
            check(row, got == *row.counts,
                  "counts " + fmt(got) + " != expected " + fmt(*row.counts));
        }
        if (row.volume) {
            Rational vol2 = volume_squared(gram_from_edges(row.edges));
            check(row, vol2 == Rational(*row.volume * *row.volume),
                  "volume^2 " + to_string(vol2) + " != expected " +
                      to_string(*row.volume) + "^2");
        }
    }
    return report;
}

}  // namespace pipedlab
