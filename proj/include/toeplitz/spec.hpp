// Toeplitz graph G_n<t1,...,tk>: vertices 1..n, i ~ j iff |i-j| is one of the
// offsets. A spec stores only (n, offsets); everything else is derived.
#pragma once

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toeplitz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input to a constructor/parser.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Operation called outside its contract (non-arithmetic spec, k != 2, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Oracle budget exceeded.
class CapError : public Error {
public:
    using Error::Error;
};

struct ComponentPartition {
    std::vector<std::vector<int>> blocks;  // disjoint, sorted, union = [n]
};

class Spec {
public:
    // Validates and normalizes: offsets are deduplicated and sorted, each must
    // lie in [1, n-1]. The empty offset set is rejected here; edgeless graphs
    // exist only via make_allow_edgeless.
    static Spec make(int n, std::vector<int> offsets) {
        if (offsets.empty())
            throw ValidationError("empty offset set (use make_allow_edgeless for the edgeless graph)");
        return Spec(n, std::move(offsets));
    }

    static Spec make_allow_edgeless(int n, std::vector<int> offsets) {
        return Spec(n, std::move(offsets));
    }

    int order() const { return n_; }
    const std::vector<int>& offsets() const { return offsets_; }
    int offset_count() const { return static_cast<int>(offsets_.size()); }
    bool edgeless() const { return offsets_.empty(); }

    bool has_offset(int t) const {
        return std::binary_search(offsets_.begin(), offsets_.end(), t);
    }

    bool adjacent(int i, int j) const {
        require_vertex(i);
        require_vertex(j);
        return i != j && has_offset(i < j ? j - i : i - j);
    }

    // {i +- t} clipped to [n], ascending.
    std::vector<int> neighbors(int i) const {
        require_vertex(i);
        std::vector<int> out;
        out.reserve(2 * offsets_.size());
        for (auto it = offsets_.rbegin(); it != offsets_.rend(); ++it)
            if (i - *it >= 1) out.push_back(i - *it);
        for (int t : offsets_)
            if (i + t <= n_) out.push_back(i + t);
        return out;
    }

    // Number of offsets strictly below i. deg(i) = ell(i) + ell(n-i+1).
    int ell(int i) const {
        if (i < 1 || i > n_) throw ValidationError("ell: index out of [1,n]");
        return static_cast<int>(
            std::lower_bound(offsets_.begin(), offsets_.end(), i) - offsets_.begin());
    }

    int degree(int i) const {
        require_vertex(i);
        return ell(i) + ell(n_ - i + 1);
    }

    // The step t when offsets are exactly t, 2t, ..., kt; nullopt otherwise
    // (and for the edgeless spec).
    std::optional<int> arithmetic_step() const {
        if (offsets_.empty()) return std::nullopt;
        int t = offsets_.front();
        for (std::size_t i = 0; i < offsets_.size(); ++i)
            if (offsets_[i] != static_cast<int>(i + 1) * t) return std::nullopt;
        return t;
    }

    // Offsets [1, n-1] \ B(G). Total: the result may be edgeless.
    Spec complement() const {
        std::vector<int> rest;
        rest.reserve(n_ - 1 - offsets_.size());
        for (int t = 1; t <= n_ - 1; ++t)
            if (!has_offset(t)) rest.push_back(t);
        return Spec(n_, std::move(rest));
    }

    // Connected components by search over the implicit adjacency, blocks
    // ordered by smallest vertex. For arithmetic specs this coincides with
    // the residue classes mod t.
    ComponentPartition components() const {
        ComponentPartition part;
        std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
        for (int start = 1; start <= n_; ++start) {
            if (seen[start]) continue;
            std::vector<int> block, stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                block.push_back(v);
                for (int u : neighbors(v)) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            std::sort(block.begin(), block.end());
            part.blocks.push_back(std::move(block));
        }
        return part;
    }

    // "n: t1,t2,...,tk"; the edgeless spec prints as "n:".
    std::string to_text() const {
        std::ostringstream os;
        os << n_ << ':';
        for (std::size_t i = 0; i < offsets_.size(); ++i)
            os << (i == 0 ? " " : ",") << offsets_[i];
        return os.str();
    }

    static Spec parse(std::string_view line, bool allow_edgeless = false) {
        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ValidationError("spec text: missing ':'");
        int n = parse_int(line.substr(0, colon), "vertex count");
        std::vector<int> offsets;
        std::string_view rest = trim(line.substr(colon + 1));
        if (!rest.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = rest.find(',', pos);
                std::string_view item = comma == std::string_view::npos
                                            ? rest.substr(pos)
                                            : rest.substr(pos, comma - pos);
                offsets.push_back(parse_int(item, "offset"));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        if (offsets.empty() && !allow_edgeless)
            throw ValidationError("spec text: empty offset list");
        return Spec(n, std::move(offsets));
    }

    friend bool operator==(const Spec&, const Spec&) = default;

private:
    Spec(int n, std::vector<int> offsets) : n_(n), offsets_(std::move(offsets)) {
        if (n_ < 1) throw ValidationError("vertex count must be positive");
        std::sort(offsets_.begin(), offsets_.end());
        offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
        for (int t : offsets_)
            if (t < 1 || t > n_ - 1)
                throw ValidationError("offset " + std::to_string(t) + " outside [1, n-1]");
    }

    void require_vertex(int i) const {
        if (i < 1 || i > n_)
            throw ValidationError("vertex " + std::to_string(i) + " outside [1, n]");
    }

    static std::string_view trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    }

    static int parse_int(std::string_view raw, const char* what) {
        std::string_view s = trim(raw);
        if (s.empty()) throw ValidationError(std::string("spec text: empty ") + what);
        int value = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                throw ValidationError(std::string("spec text: bad ") + what + " '" + std::string(s) + "'");
            if (value > (std::numeric_limits<int>::max() - (c - '0')) / 10)
                throw ValidationError(std::string("spec text: ") + what + " overflow");
            value = value * 10 + (c - '0');
        }
        return value;
    }

    int n_;
    std::vector<int> offsets_;
};

}  // namespace toeplitz
