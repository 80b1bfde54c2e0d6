#include "formats.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace reusesp {
namespace {

constexpr std::uint64_t kMaxVertices = 1000000;
constexpr std::uint64_t kMaxEdges = 1000000;
constexpr std::uint64_t kMaxWeight = 1000000000;
constexpr std::uint64_t kMaxLabel = 1000000000000000000ull;
constexpr std::uint64_t kMaxPathEdges = 10000000;
constexpr std::uint64_t kMaxCnfVars = 1000000;
constexpr std::uint64_t kMaxCnfClauses = 1000000;
constexpr std::uint64_t kMaxMapVars = 100000;
constexpr std::uint64_t kMaxMapClauses = 100000;
constexpr std::uint64_t kMaxId = 0xffffffffull;

struct Line {
    std::vector<std::string_view> tokens;
    int number; // 1-based physical line
};

struct Split {
    std::vector<Line> lines; // comment and blank lines removed
    int end_line;            // 1-based line number just past the input
};

Split split_lines(std::string_view text) {
    Split split;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && number > 0) break;
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        Line out{{}, number};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start) out.tokens.push_back(line.substr(start, i - start));
        }
        if (out.tokens.empty()) continue;
        if (out.tokens[0][0] == 'c') continue; // comment
        split.lines.push_back(std::move(out));
        if (eol == std::string_view::npos) break;
    }
    split.end_line = number + 1;
    return split;
}

std::uint64_t parse_u64(std::string_view tok, std::uint64_t max, const char* what, int line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value > max))
        throw Error(ErrorCode::Parse,
                    std::string(what) + " '" + std::string(tok) + "' exceeds " +
                        std::to_string(max),
                    line);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::Parse,
                    "invalid " + std::string(what) + " '" + std::string(tok) + "'", line);
    return value;
}

std::int64_t parse_i64(std::string_view tok, std::int64_t max_abs, const char* what,
                       int line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec == std::errc::result_out_of_range ||
        (ec == std::errc{} && (value > max_abs || value < -max_abs)))
        throw Error(ErrorCode::Parse,
                    std::string(what) + " '" + std::string(tok) + "' out of range", line);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::Parse,
                    "invalid " + std::string(what) + " '" + std::string(tok) + "'", line);
    return value;
}

[[noreturn]] void fail(const std::string& message, int line) {
    throw Error(ErrorCode::Parse, message, line);
}

const Line& expect_line(const Split& split, std::size_t index, const char* what) {
    if (index >= split.lines.size())
        fail(std::string("missing ") + what, split.end_line);
    return split.lines[index];
}

void reject_extra(const Split& split, std::size_t first_unused) {
    if (first_unused < split.lines.size())
        fail("unexpected extra line", split.lines[first_unused].number);
}

} // namespace

Instance parse_instance(std::string_view text) {
    Split split = split_lines(text);
    const Line& header = expect_line(split, 0, "'p reuse' header");
    if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "reuse")
        fail("expected 'p reuse <vertices> <edges> <source> <sink>' header", header.number);
    if (header.tokens.size() != 6)
        fail("header must have the form 'p reuse <vertices> <edges> <source> <sink>'",
             header.number);

    Instance g;
    g.vertex_count =
        static_cast<std::uint32_t>(parse_u64(header.tokens[2], kMaxVertices, "vertex count",
                                             header.number));
    std::uint64_t edge_count =
        parse_u64(header.tokens[3], kMaxEdges, "edge count", header.number);
    g.source = static_cast<Vertex>(parse_u64(header.tokens[4], kMaxId, "source", header.number));
    g.sink = static_cast<Vertex>(parse_u64(header.tokens[5], kMaxId, "sink", header.number));

    for (std::uint64_t i = 0; i < edge_count; ++i) {
        const Line& line = expect_line(split, 1 + i, "edge line");
        if (line.tokens[0] != "e")
            fail("expected 'e <tail> <head> <weight> <label>' line", line.number);
        if (line.tokens.size() != 5)
            fail("edge line must have the form 'e <tail> <head> <weight> <label>'",
                 line.number);
        Edge e;
        e.tail = static_cast<Vertex>(parse_u64(line.tokens[1], kMaxId, "tail", line.number));
        e.head = static_cast<Vertex>(parse_u64(line.tokens[2], kMaxId, "head", line.number));
        e.weight = parse_u64(line.tokens[3], kMaxWeight, "weight", line.number);
        e.label = parse_u64(line.tokens[4], kMaxLabel, "label", line.number);
        g.edges.push_back(e);
    }
    reject_extra(split, 1 + edge_count);

    ValidationReport report = validate_instance(g);
    if (!report.ok()) throw Error(ErrorCode::Validation, report.to_string());
    return g;
}

std::string serialize_instance(const Instance& g) {
    std::ostringstream out;
    out << "p reuse " << g.vertex_count << ' ' << g.edges.size() << ' ' << g.source << ' '
        << g.sink << '\n';
    for (const Edge& e : g.edges)
        out << "e " << e.tail << ' ' << e.head << ' ' << e.weight << ' ' << e.label << '\n';
    return out.str();
}

std::pair<PathTrace, Budget> parse_certificate(std::string_view text) {
    Split split = split_lines(text);
    const Line& header = expect_line(split, 0, "'p cert' header");
    if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "cert")
        fail("expected 'p cert <edge_count> <budget>' header", header.number);
    if (header.tokens.size() != 4)
        fail("header must have the form 'p cert <edge_count> <budget>'", header.number);

    std::uint64_t edge_count =
        parse_u64(header.tokens[2], kMaxPathEdges, "edge count", header.number);
    Budget k{parse_u64(header.tokens[3], std::numeric_limits<std::uint64_t>::max(), "budget",
                       header.number)};

    PathTrace p;
    for (std::uint64_t i = 0; i < edge_count; ++i) {
        const Line& line = expect_line(split, 1 + i, "'x' line");
        if (line.tokens[0] != "x") fail("expected 'x <edge_id>' line", line.number);
        if (line.tokens.size() != 2)
            fail("path line must have the form 'x <edge_id>'", line.number);
        p.edge_ids.push_back(
            static_cast<EdgeId>(parse_u64(line.tokens[1], kMaxId, "edge id", line.number)));
    }
    reject_extra(split, 1 + edge_count);
    return {std::move(p), k};
}

std::string serialize_certificate(const PathTrace& p, Budget k) {
    std::ostringstream out;
    out << "p cert " << p.edge_ids.size() << ' ' << k.value << '\n';
    for (EdgeId id : p.edge_ids) out << "x " << id << '\n';
    return out.str();
}

CnfFormula parse_dimacs_cnf(std::string_view text, bool pad_to_3) {
    Split split = split_lines(text);
    const Line& header = expect_line(split, 0, "'p cnf' header");
    if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "cnf")
        fail("expected 'p cnf <num_vars> <num_clauses>' header", header.number);
    if (header.tokens.size() != 4)
        fail("header must have the form 'p cnf <num_vars> <num_clauses>'", header.number);

    CnfFormula f;
    std::uint64_t num_vars =
        parse_u64(header.tokens[2], kMaxCnfVars, "variable count", header.number);
    if (num_vars == 0) fail("formula must have at least one variable", header.number);
    f.num_vars = static_cast<std::uint32_t>(num_vars);
    std::uint64_t num_clauses =
        parse_u64(header.tokens[3], kMaxCnfClauses, "clause count", header.number);

    std::vector<Literal> pending;
    int last_line = header.number;
    for (std::size_t li = 1; li < split.lines.size(); ++li) {
        const Line& line = split.lines[li];
        last_line = line.number;
        for (std::string_view tok : line.tokens) {
            std::int64_t lit =
                parse_i64(tok, static_cast<std::int64_t>(f.num_vars), "literal", line.number);
            if (lit != 0) {
                if (f.clauses.size() == num_clauses)
                    fail("more clauses than the header declares", line.number);
                pending.push_back(Literal{static_cast<std::uint32_t>(lit > 0 ? lit - 1
                                                                             : -lit - 1),
                                          lit < 0});
                continue;
            }
            if (pending.empty()) fail("empty clause", line.number);
            if (pending.size() < 3 && !pad_to_3)
                fail("clause has " + std::to_string(pending.size()) +
                         " literal(s), expected 3",
                     line.number);
            if (pending.size() > 3)
                fail("clause has " + std::to_string(pending.size()) +
                         " literal(s), expected 3",
                     line.number);
            while (pending.size() < 3) pending.push_back(pending.back());
            if (f.clauses.size() == num_clauses)
                fail("more clauses than the header declares", line.number);
            f.clauses.push_back(Clause{pending[0], pending[1], pending[2]});
            pending.clear();
        }
    }
    if (!pending.empty()) fail("clause missing its terminating 0", last_line);
    if (f.clauses.size() != num_clauses)
        fail("header declares " + std::to_string(num_clauses) + " clause(s), file has " +
                 std::to_string(f.clauses.size()),
             split.end_line);
    return f;
}

std::string serialize_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c)
            out << (lit.negated ? -static_cast<std::int64_t>(lit.var) - 1
                                : static_cast<std::int64_t>(lit.var) + 1)
                << ' ';
        out << "0\n";
    }
    return out.str();
}

SatReduction parse_sat_map(std::string_view text) {
    Split split = split_lines(text);
    const Line& header = expect_line(split, 0, "'p map3sat' header");
    if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "map3sat")
        fail("expected 'p map3sat <num_vars> <num_clauses>' header", header.number);
    if (header.tokens.size() != 4)
        fail("header must have the form 'p map3sat <num_vars> <num_clauses>'", header.number);

    std::uint64_t n = parse_u64(header.tokens[2], kMaxMapVars, "variable count", header.number);
    if (n == 0) fail("formula must have at least one variable", header.number);
    std::uint64_t m =
        parse_u64(header.tokens[3], kMaxMapClauses, "clause count", header.number);

    struct VLine {
        std::uint64_t branch_true, branch_false, edge_true, edge_false;
        int number;
    };
    struct LLine {
        std::int64_t literal;
        std::uint64_t edge;
        int number;
    };
    std::vector<VLine> vlines;
    std::vector<LLine> llines;

    std::size_t li = 1;
    for (std::uint64_t i = 0; i < n; ++i, ++li) {
        const Line& line = expect_line(split, li, "'v' line");
        if (line.tokens[0] != "v")
            fail("expected 'v <i> <branch_true> <branch_false> <edge_true> <edge_false>'",
                 line.number);
        if (line.tokens.size() != 6)
            fail("variable line must have the form "
                 "'v <i> <branch_true> <branch_false> <edge_true> <edge_false>'",
                 line.number);
        if (parse_u64(line.tokens[1], kMaxId, "variable index", line.number) != i)
            fail("variable lines must appear in order; expected index " + std::to_string(i),
                 line.number);
        vlines.push_back(VLine{parse_u64(line.tokens[2], kMaxId, "vertex id", line.number),
                               parse_u64(line.tokens[3], kMaxId, "vertex id", line.number),
                               parse_u64(line.tokens[4], kMaxId, "edge id", line.number),
                               parse_u64(line.tokens[5], kMaxId, "edge id", line.number),
                               line.number});
    }
    CnfFormula f;
    f.num_vars = static_cast<std::uint32_t>(n);
    for (std::uint64_t j = 0; j < m; ++j) {
        for (std::uint64_t k = 0; k < 3; ++k, ++li) {
            const Line& line = expect_line(split, li, "'l' line");
            if (line.tokens[0] != "l")
                fail("expected 'l <clause> <slot> <literal> <edge_id>'", line.number);
            if (line.tokens.size() != 5)
                fail("literal line must have the form 'l <clause> <slot> <literal> <edge_id>'",
                     line.number);
            if (parse_u64(line.tokens[1], kMaxId, "clause index", line.number) != j ||
                parse_u64(line.tokens[2], kMaxId, "slot", line.number) != k)
                fail("literal lines must appear in order; expected clause " +
                         std::to_string(j) + " slot " + std::to_string(k),
                     line.number);
            std::int64_t lit = parse_i64(line.tokens[3], static_cast<std::int64_t>(n),
                                         "literal", line.number);
            if (lit == 0) fail("literal must not be 0", line.number);
            llines.push_back(LLine{lit, parse_u64(line.tokens[4], kMaxId, "edge id",
                                                  line.number),
                                   line.number});
        }
        const LLine* base = &llines[llines.size() - 3];
        f.clauses.push_back(
            Clause{Literal{static_cast<std::uint32_t>(base[0].literal > 0
                                                          ? base[0].literal - 1
                                                          : -base[0].literal - 1),
                           base[0].literal < 0},
                   Literal{static_cast<std::uint32_t>(base[1].literal > 0
                                                          ? base[1].literal - 1
                                                          : -base[1].literal - 1),
                           base[1].literal < 0},
                   Literal{static_cast<std::uint32_t>(base[2].literal > 0
                                                          ? base[2].literal - 1
                                                          : -base[2].literal - 1),
                           base[2].literal < 0}});
    }
    reject_extra(split, li);

    SatReduction red = reduce_3sat(f);
    for (std::uint64_t i = 0; i < n; ++i) {
        const VariableGadget& gd = red.map.variables[i];
        const VLine& vl = vlines[i];
        if (vl.branch_true != gd.branch_true || vl.branch_false != gd.branch_false ||
            vl.edge_true != gd.edge_true || vl.edge_false != gd.edge_false)
            fail("variable line does not match the rebuilt reduction", vl.number);
    }
    for (std::uint64_t j = 0; j < m; ++j)
        for (std::uint64_t k = 0; k < 3; ++k) {
            const LLine& ll = llines[j * 3 + k];
            if (ll.edge != red.map.clauses[j].literal_edge[k])
                fail("literal line does not match the rebuilt reduction", ll.number);
        }
    return red;
}

std::string serialize_sat_map(const SatReduction& red) {
    const SatReductionMap& map = red.map;
    std::ostringstream out;
    out << "p map3sat " << map.formula.num_vars << ' ' << map.formula.clauses.size() << '\n';
    for (std::size_t i = 0; i < map.variables.size(); ++i) {
        const VariableGadget& gd = map.variables[i];
        out << "v " << i << ' ' << gd.branch_true << ' ' << gd.branch_false << ' '
            << gd.edge_true << ' ' << gd.edge_false << '\n';
    }
    for (std::size_t j = 0; j < map.clauses.size(); ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            const Literal& lit = map.formula.clauses[j][k];
            out << "l " << j << ' ' << k << ' '
                << (lit.negated ? -static_cast<std::int64_t>(lit.var) - 1
                                : static_cast<std::int64_t>(lit.var) + 1)
                << ' ' << map.clauses[j].literal_edge[k] << '\n';
        }
    return out.str();
}

} // namespace reusesp
