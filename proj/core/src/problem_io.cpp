#include "maxnorm/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace maxnorm {

namespace {

constexpr std::string_view kMagic = "MAXNORM-BLP 1";

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-comment, non-blank line split into tokens; false at EOF.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            last_ = line.substr(first);
            tokens.clear();
            std::istringstream ss(last_);
            for (std::string tok; ss >> tok;) {
                tokens.push_back(std::move(tok));
            }
            return true;
        }
        return false;
    }

    const std::string& last() const { return last_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidProblem("line " + std::to_string(line_no_) + ": " + what);
    }

private:
    std::istream& in_;
    std::string last_;
    std::size_t line_no_ = 0;
};

template <typename T>
T parse_number(const LineReader& reader, const std::string& tok) {
    T value{};
    const char* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        reader.fail("cannot parse '" + tok + "'");
    }
    return value;
}

}  // namespace

LabelingProblem read_problem(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;

    if (!reader.next(tok) || reader.last() != kMagic) {
        reader.fail("expected header '" + std::string(kMagic) + "'");
    }
    if (!reader.next(tok) || tok.size() != 2) {
        reader.fail("expected '<n> <m>'");
    }
    LabelingProblem p;
    p.num_vars = parse_number<std::size_t>(reader, tok[0]);
    const auto m = parse_number<std::size_t>(reader, tok[1]);
    if (p.num_vars == 0) {
        reader.fail("variable count must be at least 1");
    }

    p.unary.resize(p.num_vars);
    std::vector<bool> seen(p.num_vars, false);
    for (std::size_t k = 0; k < p.num_vars; ++k) {
        if (!reader.next(tok) || tok.size() != 4 || tok[0] != "U") {
            reader.fail("expected 'U <i> <phi0> <phi1>'");
        }
        const auto i = parse_number<std::uint32_t>(reader, tok[1]);
        if (i < 1 || i > p.num_vars || seen[i - 1]) {
            reader.fail("unary index out of range or repeated");
        }
        seen[i - 1] = true;
        p.unary[i - 1].cost = {parse_number<double>(reader, tok[2]),
                               parse_number<double>(reader, tok[3])};
    }

    p.pairwise.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (!reader.next(tok) || tok.size() != 7 || tok[0] != "P") {
            reader.fail("expected 'P <i> <j> <phi00> <phi01> <phi10> <phi11>'");
        }
        PairwiseTerm t;
        t.i = parse_number<std::uint32_t>(reader, tok[1]);
        t.j = parse_number<std::uint32_t>(reader, tok[2]);
        for (std::size_t c = 0; c < 4; ++c) {
            t.cost[c] = parse_number<double>(reader, tok[3 + c]);
        }
        p.pairwise.push_back(t);
    }
    if (reader.next(tok)) {
        reader.fail("unexpected trailing content");
    }

    p.validate();
    return p;
}

LabelingProblem read_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_problem(in);
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

void write_problem(std::ostream& out, const LabelingProblem& p) {
    out << kMagic << '\n' << p.num_vars << ' ' << p.pairwise.size() << '\n';
    for (std::size_t k = 0; k < p.num_vars; ++k) {
        out << "U " << (k + 1) << ' ' << format_double(p.unary[k].cost[0]) << ' '
            << format_double(p.unary[k].cost[1]) << '\n';
    }
    for (const PairwiseTerm& t : p.pairwise) {
        out << "P " << t.i << ' ' << t.j;
        for (double c : t.cost) {
            out << ' ' << format_double(c);
        }
        out << '\n';
    }
}

void write_problem_file(const std::filesystem::path& path, const LabelingProblem& p) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_problem(out, p);
    if (!out.flush()) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

void write_labeling(std::ostream& out, const TruthAssignment& l, double e_inf) {
    for (std::uint32_t var = 1; var <= l.size(); ++var) {
        out << "L " << var << ' ' << (l[var] ? 1 : 0) << '\n';
    }
    out << "E_INF " << format_double(e_inf) << '\n';
}

}  // namespace maxnorm
