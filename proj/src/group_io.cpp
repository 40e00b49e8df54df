#include "mip/group_io.hpp"

#include <fstream>
#include <sstream>

#include "mip/errors.hpp"

namespace mip {

namespace {

// strips comments, records "# name:" when seen
struct LineReader {
    std::istream& in;
    std::string name;

    // next non-empty payload line
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) {
                std::string comment = line.substr(hash + 1);
                auto key = comment.find("name:");
                if (key != std::string::npos) {
                    std::string v = comment.substr(key + 5);
                    size_t b = v.find_first_not_of(" \t");
                    size_t e = v.find_last_not_of(" \t\r");
                    if (b != std::string::npos) name = v.substr(b, e - b + 1);
                }
                line = line.substr(0, hash);
            }
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    }
};

std::vector<int> parse_ints(const std::string& line, const char* what) {
    std::istringstream ss(line);
    std::vector<int> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " token '" + tok +
                             "'");
        }
    }
    return out;
}

} // namespace

LoadedGroup read_group(std::istream& in) {
    LineReader rd{in, {}};
    std::string line;
    if (!rd.next(line)) throw ParseError("empty group file");

    std::istringstream head(line);
    std::string kind;
    long long size = 0;
    head >> kind >> size;
    if (!head || size <= 0)
        throw ParseError("expected 'perm <degree>' or 'cayley <n>' header");

    LoadedGroup lg;
    if (kind == "perm") {
        int degree = (int)size;
        std::vector<std::vector<int>> gens;
        while (rd.next(line)) {
            std::vector<int> img = parse_ints(line, "permutation");
            if ((int)img.size() != degree)
                throw ParseError("permutation line has " +
                                 std::to_string(img.size()) +
                                 " entries, expected " +
                                 std::to_string(degree));
            for (int& v : img) {
                if (v < 1 || v > degree)
                    throw ParseError("permutation image " + std::to_string(v) +
                                     " out of range 1.." +
                                     std::to_string(degree));
                --v; // to 0-based
            }
            gens.push_back(std::move(img));
        }
        if (gens.empty()) throw ParseError("perm file has no generators");
        lg.G = group_from_permutations(gens);
    } else if (kind == "cayley") {
        int n = (int)size;
        std::vector<int> table;
        table.reserve((size_t)n * n);
        int rows = 0;
        while (rows < n && rd.next(line)) {
            std::vector<int> row = parse_ints(line, "cayley");
            if ((int)row.size() != n)
                throw ParseError("cayley row has " +
                                 std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
            table.insert(table.end(), row.begin(), row.end());
            ++rows;
        }
        if (rows != n)
            throw ParseError("cayley table ended after " +
                             std::to_string(rows) + " of " +
                             std::to_string(n) + " rows");
        lg.G = group_from_cayley(table, n);
    } else {
        throw ParseError("unknown group format '" + kind + "'");
    }
    lg.name = rd.name;
    return lg;
}

LoadedGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    try {
        return read_group(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_cayley(std::ostream& out, const Group& G, const std::string& name) {
    if (!name.empty()) out << "# name: " << name << "\n";
    out << "cayley " << G.n << "\n";
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b) {
            if (b) out << ' ';
            out << G.at(a, b);
        }
        out << "\n";
    }
}

void write_perm_regular(std::ostream& out, const Group& G,
                        const std::vector<int>& gens,
                        const std::string& name) {
    if (!name.empty()) out << "# name: " << name << "\n";
    out << "perm " << G.n << "\n";
    for (int g : gens) {
        for (int x = 0; x < G.n; ++x) {
            if (x) out << ' ';
            out << G.at(g, x) + 1; // left translation, 1-based
        }
        out << "\n";
    }
}

} // namespace mip
