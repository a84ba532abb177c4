#pragma once

// Bundle files: a JSON document with the sections, in this order,
//
//   "spaces"    name → {"dim": n, "labels": [...]}
//   "algebras"  name → {"space": s, "mult": matrix, "unit": vector}
//   "maps"      name → {"domain": [s...], "codomain": [s...], "matrix": matrix}
//   "twisting"  name → {"a": alg, "b": alg, "map": m}           (m : B⊗A → A⊗B)
//   "crossed"   name → {"alg": alg, "pointed": {"space": s, "point": vector},
//                       "r_map": m, "sigma": m}
//   "iteration" name → {"left": crossed, "right": crossed, "q_map": m}
//
// Matrices are dense, one array per row. Scalars are JSON integers or
// strings "p/q" (q != 0). Every section is optional on load.

#include "crossprod/gallery.hpp"
#include "crossprod/iteration.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace crossprod {

struct Bundle {
    struct TwistingRef {
        std::string a, b, map;
        bool operator==(const TwistingRef&) const = default;
    };
    struct CrossedRef {
        std::string alg, space;
        Vector point;
        std::string r_map, sigma;
        bool operator==(const CrossedRef&) const = default;
    };
    struct IterationRef {
        std::string left, right, q_map;
        bool operator==(const IterationRef&) const = default;
    };

    std::map<std::string, Space> spaces;
    std::map<std::string, Algebra> algebras;
    std::map<std::string, MultiLinMap> maps;
    std::map<std::string, TwistingRef> twisting;
    std::map<std::string, CrossedRef> crossed;
    std::map<std::string, IterationRef> iteration;

    // Adders register every space they reference, keyed by Space::name().
    // Redefining a name with different content throws Error.
    void add_space(const Space& space);
    void add_algebra(const std::string& name, const Algebra& alg);
    void add_map(const std::string& name, const MultiLinMap& map);
    // Sub-objects are named "<name>.A", "<name>.B", "<name>.R", "<name>.sigma", ...
    void add_twisting(const std::string& name, const TwistingMap& t);
    void add_crossed(const std::string& name, const CrossedData& c);
    void add_iteration(const std::string& name, const IterationData& d);

    // Resolve by name; throw RefError.
    const Space& space(const std::string& name) const;
    const Algebra& algebra(const std::string& name) const;
    const MultiLinMap& map(const std::string& name) const;
    TwistingMap twisting_map(const std::string& name) const;
    CrossedData crossed_data(const std::string& name) const;
    IterationData iteration_data(const std::string& name) const;

    bool operator==(const Bundle& other) const;

private:
    void add_crossed_with(const std::string& name, const CrossedData& c, const std::string& alg_name);
};

// Entry-for-entry equality including factor lists.
bool identical(const MultiLinMap& f, const MultiLinMap& g);

// Parses and validates; `origin` names the source in FormatError messages.
// Throws FormatError or RefError.
Bundle parse_bundle(std::string_view text, const std::string& origin = "<memory>");
// Throws IoError, FormatError, RefError.
Bundle load_bundle(const std::filesystem::path& path);

// Canonical text: fixed section order, names sorted, integers as numbers,
// other rationals as "p/q".
std::string dump_bundle(const Bundle& bundle);
// Throws IoError.
void save_bundle(const Bundle& bundle, const std::filesystem::path& path);

// The whole instance corpus, or a single named instance, as a bundle.
// Throws RefError for an unknown instance name.
Bundle corpus_bundle();
Bundle instance_bundle(const std::string& name);

}  // namespace crossprod
