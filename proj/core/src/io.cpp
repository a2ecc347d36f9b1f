#include "oitm/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace oitm {
namespace {

// Strips comments and yields non-blank lines with their 1-based numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out, int& line_no) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream probe(raw);
            std::string tok;
            if (probe >> tok) {
                out = raw;
                line_no = line_;
                return true;
            }
        }
        return false;
    }

private:
    std::istream& in_;
    int line_ = 0;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

OitmInstance read_instance(std::istream& in) {
    LineReader reader(in);
    std::string line;
    int line_no = 0;
    if (!reader.next(line, line_no)) throw parse_error("empty instance file");

    std::istringstream head(line);
    std::string magic;
    int B = -1;
    head >> magic >> B;
    if (magic != "oitm" || B < 0) fail(line_no, "expected `oitm <B>`");
    bool weighted = false;
    Weight budget = 0;
    std::string kw;
    if (head >> kw) {
        if (kw != "weighted" || !(head >> budget))
            fail(line_no, "expected `weighted <budget>`");
        weighted = true;
    }

    std::vector<Entry> entries;
    while (reader.next(line, line_no)) {
        std::istringstream ls(line);
        long long i = 0, j = 0, w = 0;
        if (!(ls >> i >> j)) fail(line_no, "expected `i j" +
                                           std::string(weighted ? " w`" : "`"));
        if (weighted && !(ls >> w)) fail(line_no, "weighted instance entry missing weight");
        std::string extra;
        if (ls >> extra) fail(line_no, "trailing token `" + extra + "`");
        if (i < 1 || i > 2 * B || j < 1 || j > 2 * B)
            fail(line_no, "index out of [1, " + std::to_string(2 * B) + "]");
        entries.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), w});
    }
    try {
        return weighted ? OitmInstance::weighted(B, std::move(entries), budget)
                        : OitmInstance::decision(B, std::move(entries));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

OitmInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const OitmInstance& inst) {
    out << "oitm " << inst.block_count();
    if (inst.is_weighted()) out << " weighted " << inst.budget();
    out << '\n';
    for (const Entry& e : inst.entries()) {
        out << (e.row + 1) << ' ' << (e.col + 1);
        if (inst.is_weighted()) out << ' ' << e.weight;
        out << '\n';
    }
}

OitmSolution read_solution(std::istream& in) {
    LineReader reader(in);
    std::string line;
    int line_no = 0;

    if (!reader.next(line, line_no)) throw parse_error("empty solution file");
    std::istringstream head(line);
    std::string kw, bits;
    head >> kw >> bits;
    if (kw != "sigma" || bits.empty()) fail(line_no, "expected `sigma <bitstring>`");

    OitmSolution sol;
    for (char c : bits) {
        if (c != '0' && c != '1') fail(line_no, "sigma must be a 0/1 string");
        sol.sigma.push_back(c == '1');
    }

    if (!reader.next(line, line_no)) throw parse_error("missing perm line");
    std::istringstream ps(line);
    ps >> kw;
    if (kw != "perm") fail(line_no, "expected `perm <targets>`");
    long long t = 0;
    while (ps >> t) sol.perm_target.push_back(static_cast<int>(t - 1));
    if (sol.perm_target.size() != sol.sigma.size())
        fail(line_no, "perm must list one target per block");
    return sol;
}

void write_solution(std::ostream& out, const OitmSolution& sol) {
    out << "sigma ";
    for (auto s : sol.sigma) out << (s ? '1' : '0');
    out << "\nperm";
    for (int t : sol.perm_target) out << ' ' << (t + 1);
    out << '\n';
}

TdmInstance read_tdm(std::istream& in) {
    LineReader reader(in);
    std::string line;
    int line_no = 0;
    if (!reader.next(line, line_no)) throw parse_error("empty 3dm file");

    std::istringstream head(line);
    std::string magic;
    int n = -1;
    head >> magic >> n;
    if (magic != "3dm" || n < 0) fail(line_no, "expected `3dm <n>`");
    TdmInstance inst;
    inst.n = n;
    std::string kw;
    if (head >> kw) {
        if (kw != "weighted" || !(head >> inst.budget))
            fail(line_no, "expected `weighted <budget>`");
        inst.weighted = true;
    }

    while (reader.next(line, line_no)) {
        std::istringstream ls(line);
        long long i = 0, j = 0, k = 0, w = 0;
        if (!(ls >> i >> j >> k)) fail(line_no, "expected `i j k`");
        if (inst.weighted && !(ls >> w)) fail(line_no, "weighted triple missing weight");
        if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
            fail(line_no, "triple index out of [1, " + std::to_string(n) + "]");
        inst.triples.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1),
                                static_cast<int>(k - 1), w});
    }
    return inst;
}

void write_tdm(std::ostream& out, const TdmInstance& inst) {
    out << "3dm " << inst.n;
    if (inst.weighted) out << " weighted " << inst.budget;
    out << '\n';
    for (const auto& t : inst.triples) {
        out << (t.i + 1) << ' ' << (t.j + 1) << ' ' << (t.k + 1);
        if (inst.weighted) out << ' ' << t.w;
        out << '\n';
    }
}

}  // namespace oitm
