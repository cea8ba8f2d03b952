#include "ramsey/construct.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

int ramsey_lower_bound(const RamseyParams& params) {
    if (params.gamma < 2 || params.kappa < 2)
        throw std::invalid_argument("ramsey_lower_bound: gamma and kappa must be >= 2");
    return (params.gamma - 1) * (params.kappa - 1) + 1;
}

Coloring blow_up(const Coloring& outer, const Coloring& inner) {
    const int po = outer.vertex_count(), pi = inner.vertex_count();
    const int ro = outer.class_count(), ri = inner.class_count();
    if (po < 1 || pi < 1) throw std::invalid_argument("blow_up: ingredients need >= 1 vertex");
    if (po * pi > kMaxVertices)
        throw std::invalid_argument("blow_up: product " + std::to_string(po * pi) +
                                    " exceeds max vertex count");
    if (ro + ri > 255) throw std::invalid_argument("blow_up: too many classes");
    Coloring out(po * pi, ro + ri);
    for (int x = 0; x < po * pi; ++x) {
        for (int y = x + 1; y < po * pi; ++y) {
            const int bx = x / pi, by = y / pi;
            if (bx == by)
                out.set_class(x, y, ro + inner.class_of(x % pi, y % pi));
            else
                out.set_class(x, y, outer.class_of(bx, by));
        }
    }
    return out;
}

Coloring pentagon_coloring() {
    Coloring c(5, 2);
    for (int i = 0; i < 5; ++i) {
        c.set_class(i, (i + 1) % 5, 0);
        c.set_class(i, (i + 2) % 5, 1);
    }
    return c;
}

IngredientError::IngredientError(std::string which_in, Witness w, const std::string& target_name)
    : std::runtime_error(which_in + " ingredient contains " + target_name + " in class " +
                         std::to_string(w.class_index) + " (" +
                         class_label(w.class_index).name + ")"),
      which(std::move(which_in)), witness(std::move(w)) {}

Coloring lower_bound_witness(const Coloring& inner, const Coloring& outer, const TargetSpec& t) {
    const int ri = inner.class_count(), ro = outer.class_count();
    if (t.size() != ri + ro)
        throw std::invalid_argument("lower_bound_witness: " + std::to_string(t.size()) +
                                    " targets for " + std::to_string(ri) + "+" +
                                    std::to_string(ro) + " ingredient classes");
    std::vector<Target> inner_targets(t.targets.begin(), t.targets.begin() + ri);
    std::vector<Target> outer_targets(t.targets.begin() + ri, t.targets.end());
    for (const Target& ot : outer_targets)
        if (ot.kind != Target::Kind::Clique)
            throw std::invalid_argument("lower_bound_witness: outer target " + ot.name() +
                                        " is not a clique");
    TargetSpec inner_spec(std::move(inner_targets));
    TargetSpec outer_spec(std::move(outer_targets));
    if (auto w = verify_coloring(inner, inner_spec))
        throw IngredientError("inner", *w, inner_spec[w->class_index].name());
    if (auto w = verify_coloring(outer, outer_spec))
        throw IngredientError("outer", *w, outer_spec[w->class_index].name());

    Coloring b = blow_up(outer, inner);
    // Re-index: blow_up puts outer classes first; t lists inner targets
    // first.
    std::vector<int> remap(ro + ri);
    for (int j = 0; j < ro; ++j) remap[j] = ri + j;
    for (int i = 0; i < ri; ++i) remap[ro + i] = i;
    Coloring out(b.vertex_count(), ro + ri);
    for (std::size_t idx = 0; idx < b.cells().size(); ++idx)
        out.data()[idx] = static_cast<std::uint8_t>(remap[b.cells()[idx]]);

    if (auto w = verify_coloring(out, t))
        throw std::logic_error("lower_bound_witness: construction failed its own check: " +
                               format_witness(*w));
    return out;
}

namespace {

// Premise values with their literature sources. Only the entries actually
// exercised by tests are required; anything added here must keep a citation.
constexpr const char* kBuiltinKappaTable = R"(# kappa = R(K_a, K_b, ...) premise values
# key: sorted clique sizes   value   citation
3,3 6 GreenwoodGleason1955
3,4 9 GreenwoodGleason1955
3,5 14 GreenwoodGleason1955
3,6 18 Kery1964
3,7 23 GraverYackel1968
3,8 28 McKayZhang1992
3,9 36 GrinsteadRoberts1982
4,4 18 GreenwoodGleason1955
4,5 25 McKayRadziszowski1995
3,3,3 17 GreenwoodGleason1955
)";

} // namespace

KappaTable KappaTable::builtin() {
    KappaTable t;
    std::istringstream in(kBuiltinKappaTable);
    t.merge(in, "<builtin>");
    return t;
}

void KappaTable::merge(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw FormatError("kappa table " + origin + ", line " + std::to_string(lineno) + ": " +
                          msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string sizes_field, citation, extra;
        int kappa = 0;
        if (!(ls >> sizes_field >> kappa >> citation)) fail("expected '<sizes> <kappa> <citation>'");
        if (ls >> extra) fail("trailing tokens");
        std::vector<int> sizes;
        std::size_t pos = 0;
        while (pos <= sizes_field.size()) {
            std::size_t comma = sizes_field.find(',', pos);
            if (comma == std::string::npos) comma = sizes_field.size();
            std::string tok = sizes_field.substr(pos, comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                fail("bad size '" + tok + "'");
            sizes.push_back(std::stoi(tok));
            if (comma == sizes_field.size()) break;
            pos = comma + 1;
        }
        if (sizes.size() < 2) fail("need at least two clique sizes (single cliques are definitional)");
        if (!std::is_sorted(sizes.begin(), sizes.end())) fail("sizes must be sorted");
        for (int s : sizes)
            if (s < 2) fail("clique sizes must be >= 2");
        if (kappa < 2) fail("kappa must be >= 2");
        auto it = entries_.find(sizes);
        if (it != entries_.end()) {
            // restating a known value is harmless; contradicting it is not
            if (it->second.kappa != kappa)
                fail("key '" + sizes_field + "' conflicts with existing kappa = " +
                     std::to_string(it->second.kappa));
            continue;
        }
        entries_[sizes] = Entry{kappa, citation};
    }
}

void KappaTable::merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open kappa table: " + path);
    merge(in, path);
}

std::optional<KappaTable::Entry> KappaTable::lookup(std::vector<int> sizes) const {
    std::sort(sizes.begin(), sizes.end());
    auto it = entries_.find(sizes);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> known_kappa(const std::vector<int>& clique_sizes, const KappaTable& table) {
    if (clique_sizes.empty()) throw std::invalid_argument("known_kappa: empty size list");
    for (int s : clique_sizes)
        if (s < 2) throw std::invalid_argument("known_kappa: clique sizes must be >= 2");
    if (clique_sizes.size() == 1) return clique_sizes[0]; // R(K_k) = k
    if (auto e = table.lookup(clique_sizes)) return e->kappa;
    return std::nullopt;
}

std::optional<int> known_kappa(const std::vector<int>& clique_sizes) {
    return known_kappa(clique_sizes, KappaTable::builtin());
}

Prediction predicted_value(int n, const std::vector<int>& clique_sizes, const KappaTable& table) {
    if (n < 3) throw std::invalid_argument("predicted_value: need cycle length n >= 3");
    if (clique_sizes.empty()) throw std::invalid_argument("predicted_value: empty clique list");
    for (int s : clique_sizes)
        if (s < 3) throw std::invalid_argument("predicted_value: clique sizes must be >= 3");

    Prediction pred;
    auto kappa = known_kappa(clique_sizes, table);
    if (!kappa) {
        pred.status = Prediction::Status::UnknownKappa;
        pred.note = "kappa unknown for the given clique sizes";
        return pred;
    }
    pred.kappa = *kappa;
    const int k = *kappa;
    const bool triangle_exception = clique_sizes.size() == 1 && clique_sizes[0] == 3 && n == 3;
    if (n >= 4 * k + 2) {
        pred.status = Prediction::Status::Value;
        pred.rule = Prediction::Rule::Cor3;
        pred.value = (n - 1) * (k - 1) + 1;
    } else if (k >= 3 && k <= 7 && n >= k && !triangle_exception) {
        pred.status = Prediction::Status::Value;
        pred.rule = Prediction::Rule::Cor4;
        pred.value = (n - 1) * (k - 1) + 1;
    } else {
        pred.status = Prediction::Status::OutOfRange;
        pred.note = triangle_exception ? "n=l=3 exception"
                                       : "requires n >= 4*kappa+2, or kappa in {3..7} with n >= kappa";
    }
    return pred;
}

Prediction predicted_value(int n, const std::vector<int>& clique_sizes) {
    return predicted_value(n, clique_sizes, KappaTable::builtin());
}

} // namespace ramsey
