#include "sop/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace sop {

namespace {

std::vector<long long> tokenize_ints(std::string_view text, bool& saw_alpha) {
    std::vector<long long> out;
    saw_alpha = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        bool neg = false;
        std::size_t j = i;
        if (c == '-' && j + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
            neg = true;
            ++j;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            saw_alpha = true;
            throw SopError("unexpected token in matrix data");
        }
        long long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            v = v * 10 + (text[j] - '0');
            ++j;
        }
        out.push_back(neg ? -v : v);
        i = j;
    }
    return out;
}

// TSPLIB-style header: pull DIMENSION, then every integer token after
// EDGE_WEIGHT_SECTION up to EOF or the EOF keyword.
std::vector<long long> parse_header_format(std::string_view text, long long& n) {
    n = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    bool in_section = false;
    std::string section_data;
    while (std::getline(in, line)) {
        if (!in_section) {
            auto pos = line.find("DIMENSION");
            if (pos != std::string::npos) {
                auto colon = line.find(':');
                std::string num = colon == std::string::npos
                                      ? line.substr(pos + 9)
                                      : line.substr(colon + 1);
                n = std::strtoll(num.c_str(), nullptr, 10);
            }
            if (line.find("EDGE_WEIGHT_SECTION") != std::string::npos) in_section = true;
        } else {
            if (line.find("EOF") != std::string::npos) break;
            section_data += line;
            section_data += '\n';
        }
    }
    if (n < 0) throw SopError("header format: missing DIMENSION");
    if (!in_section) throw SopError("header format: missing EDGE_WEIGHT_SECTION");
    bool saw_alpha = false;
    auto tokens = tokenize_ints(section_data, saw_alpha);
    // Some SOPLIB files repeat the dimension as the first token of the section.
    if (static_cast<long long>(tokens.size()) == n * n + 1 && tokens.front() == n)
        tokens.erase(tokens.begin());
    return tokens;
}

}  // namespace

Instance Instance::parse(std::string_view text, std::string name) {
    long long n = 0;
    std::vector<long long> matrix;

    bool has_alpha = text.find_first_not_of(" \t\r\n0123456789-") != std::string_view::npos;
    if (has_alpha) {
        matrix = parse_header_format(text, n);
    } else {
        bool saw_alpha = false;
        auto tokens = tokenize_ints(text, saw_alpha);
        if (tokens.empty()) throw SopError("empty instance file");
        n = tokens.front();
        matrix.assign(tokens.begin() + 1, tokens.end());
    }

    if (n < 2) throw SopError("instance must have at least 2 vertices");
    if (n > 1024) throw SopError("instance too large (capacity 1024 vertices)");
    if (static_cast<long long>(matrix.size()) != n * n)
        throw SopError("matrix token count does not match a full n x n matrix");

    Instance inst;
    inst.n_ = static_cast<int>(n);
    inst.name_ = std::move(name);
    inst.weights_.assign(matrix.begin(), matrix.end());
    inst.finalize();
    return inst;
}

Instance Instance::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SopError("cannot open instance file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.stem().string());
}

void Instance::finalize() {
    preds_.assign(n_, VertexSet(n_));
    pred_counts_.assign(n_, 0);

    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            Cost w = weight(i, j);
            if (i == j) {
                if (w != 0) throw SopError("diagonal entry must be 0");
                continue;
            }
            if (w == kNoArc) {
                if (i == 0) throw SopError("start vertex row contains a precedence entry");
                preds_[i].set(j);
                ++pred_counts_[i];
            } else if (w < 0) {
                throw SopError("negative entry other than -1");
            }
        }
    }

    // Kahn's algorithm on the precedence relation (edge j -> i for j in preds(i)).
    std::vector<int> indeg(pred_counts_.begin(), pred_counts_.end());
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t head = 0;
    int seen = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        ++seen;
        for (int v = 0; v < n_; ++v)
            if (preds_[v].test(u) && --indeg[v] == 0) queue.push_back(v);
    }
    if (seen != n_) throw SopError("cyclic precedence relation");

    end_forced_last_ = pred_counts_[n_ - 1] == n_ - 1;
}

Instance Instance::random(int n, Cost max_cost, double density, std::uint64_t seed) {
    if (n < 2) throw SopError("instance must have at least 2 vertices");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    Instance inst;
    inst.n_ = n;
    {
        std::ostringstream nm;
        nm << "G." << n << "." << max_cost << "." << density << "." << seed;
        inst.name_ = nm.str();
    }
    inst.weights_.assign(static_cast<std::size_t>(n) * n, 0);
    auto at = [&inst, n](int i, int j) -> Cost& {
        return inst.weights_[static_cast<std::size_t>(i) * n + j];
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) at(i, j) = uniform(0, max_cost);

    // Endpoint conventions: start precedes everything, end follows everything.
    for (int i = 1; i < n; ++i) at(i, 0) = kNoArc;
    for (int j = 0; j < n - 1; ++j) at(n - 1, j) = kNoArc;

    // Interior precedences over a random topological order keep the relation
    // acyclic by construction.
    std::vector<int> topo(n - 2);
    std::iota(topo.begin(), topo.end(), 1);
    for (int i = n - 3; i > 0; --i)
        std::swap(topo[i], topo[uniform(0, i)]);
    const auto threshold = static_cast<std::uint64_t>(density * 1e9);
    for (std::size_t a = 0; a < topo.size(); ++a)
        for (std::size_t b = a + 1; b < topo.size(); ++b)
            if (rng() % 1000000000ull < threshold) at(topo[b], topo[a]) = kNoArc;

    inst.finalize();
    return inst;
}

bool Instance::check_feasible(std::span<const int> order) const {
    if (static_cast<int>(order.size()) != n_) return false;
    VertexSet seen(n_);
    for (int v : order) {
        if (v < 0 || v >= n_ || seen.test(v)) return false;
        if (!preds_[v].subset_of(seen)) return false;
        seen.set(v);
    }
    return order.front() == start() && order.back() == end();
}

Cost Instance::evaluate(std::span<const int> order) const {
    if (!check_feasible(order)) throw SopError("infeasible permutation");
    Cost total = 0;
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
        total += weight(order[k], order[k + 1]);
    return total;
}

std::string Instance::to_bare_string() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out << ' ';
            out << weight(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace sop
