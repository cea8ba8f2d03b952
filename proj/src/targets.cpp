#include "ramsey/targets.hpp"

#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

Target Target::clique(int k) {
    if (k < 2) throw std::invalid_argument("clique target: need k >= 2");
    return {Kind::Clique, k, complete(k)};
}

Target Target::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle target: need n >= 3");
    return {Kind::Cycle, n, ramsey::cycle(n)};
}

Target Target::path(int m) {
    if (m < 2) throw std::invalid_argument("path target: need m >= 2");
    return {Kind::Path, m, ramsey::path(m)};
}

Target Target::general(Graph g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("general target: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("general target: pattern must be connected");
    int p = g.vertex_count();
    return {Kind::General, p, std::move(g)};
}

std::string Target::name() const {
    switch (kind) {
    case Kind::Clique: return "K" + std::to_string(size);
    case Kind::Cycle: return "C" + std::to_string(size);
    case Kind::Path: return "P" + std::to_string(size);
    case Kind::General: return "F" + std::to_string(size);
    }
    return "?";
}

bool same_target(const Target& a, const Target& b) {
    return a.pattern == b.pattern;
}

TargetSpec::TargetSpec(std::vector<Target> t) : targets(std::move(t)) {
    if (targets.empty()) throw std::invalid_argument("TargetSpec: need at least one target");
}

std::string TargetSpec::name() const {
    std::string s;
    for (const auto& t : targets) {
        if (!s.empty()) s += ',';
        s += t.name();
    }
    return s;
}

namespace {

int parse_int(const std::string& text, std::size_t token_pos, const std::string& digits) {
    if (digits.empty())
        throw FormatError("target spec: missing size at position " + std::to_string(token_pos) +
                          " in '" + text + "'");
    for (char ch : digits)
        if (ch < '0' || ch > '9')
            throw FormatError("target spec: bad size '" + digits + "' at position " +
                              std::to_string(token_pos) + " in '" + text + "'");
    if (digits.size() > 6)
        throw FormatError("target spec: size '" + digits + "' too large at position " +
                          std::to_string(token_pos));
    return std::stoi(digits);
}

} // namespace

TargetSpec parse_target_spec(const std::string& text) {
    std::vector<Target> targets;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        if (token.empty())
            throw FormatError("target spec: empty token at position " + std::to_string(pos) +
                              " in '" + text + "'");
        try {
            char head = token[0];
            std::string rest = token.substr(1);
            switch (head) {
            case 'K': targets.push_back(Target::clique(parse_int(text, pos, rest))); break;
            case 'C': targets.push_back(Target::cycle(parse_int(text, pos, rest))); break;
            case 'P': targets.push_back(Target::path(parse_int(text, pos, rest))); break;
            case 'F':
                if (rest.empty() || rest[0] != ':')
                    throw FormatError("target spec: expected 'F:<path>' at position " +
                                      std::to_string(pos) + " in '" + text + "'");
                targets.push_back(Target::general(load_graph(rest.substr(1))));
                break;
            default:
                throw FormatError("target spec: unknown target kind '" + std::string(1, head) +
                                  "' at position " + std::to_string(pos) + " in '" + text + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw FormatError("target spec: " + std::string(e.what()) + " (token '" + token +
                              "' at position " + std::to_string(pos) + ")");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return TargetSpec(std::move(targets));
}

} // namespace ramsey
