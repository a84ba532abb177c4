#include "crossprod/bundle.hpp"

#include "crossprod/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace crossprod {

using nlohmann::json;

// ---------------------------------------------------------------- object graph

bool identical(const MultiLinMap& f, const MultiLinMap& g) {
    return f.domain() == g.domain() && f.codomain() == g.codomain() && f.entries() == g.entries();
}

namespace {

template <class T, class Eq>
void insert_unique(std::map<std::string, T>& section, const std::string& kind, const std::string& name,
                   const T& value, Eq eq) {
    auto [it, inserted] = section.try_emplace(name, value);
    if (!inserted && !eq(it->second, value)) throw Error("conflicting definitions of " + kind + " '" + name + "'");
}

template <class T>
const T& find_ref(const std::map<std::string, T>& section, const std::string& name) {
    auto it = section.find(name);
    if (it == section.end()) throw RefError(name);
    return it->second;
}

}  // namespace

void Bundle::add_space(const Space& space) {
    insert_unique(spaces, "space", space.name(), space, std::equal_to<>{});
}

void Bundle::add_algebra(const std::string& name, const Algebra& alg) {
    add_space(alg.space());
    insert_unique(algebras, "algebra", name, alg, std::equal_to<>{});
}

void Bundle::add_map(const std::string& name, const MultiLinMap& map) {
    for (const auto& s : map.domain()) add_space(s);
    for (const auto& s : map.codomain()) add_space(s);
    insert_unique(maps, "map", name, map, [](const auto& f, const auto& g) { return identical(f, g); });
}

void Bundle::add_twisting(const std::string& name, const TwistingMap& t) {
    add_algebra(name + ".A", t.a());
    add_algebra(name + ".B", t.b());
    add_map(name + ".R", t.map());
    insert_unique(twisting, "twisting map", name, TwistingRef{name + ".A", name + ".B", name + ".R"},
                  std::equal_to<>{});
}

void Bundle::add_crossed(const std::string& name, const CrossedData& c) { add_crossed_with(name, c, name + ".A"); }

void Bundle::add_crossed_with(const std::string& name, const CrossedData& c, const std::string& alg_name) {
    add_algebra(alg_name, c.alg());
    add_space(c.space());
    add_map(name + ".R", c.r_map());
    add_map(name + ".sigma", c.sigma());
    insert_unique(crossed, "crossed datum", name,
                  CrossedRef{alg_name, c.space().name(), c.pointed().point(), name + ".R", name + ".sigma"},
                  std::equal_to<>{});
}

void Bundle::add_iteration(const std::string& name, const IterationData& d) {
    add_crossed_with(name + ".left", d.left(), name + ".A");
    add_crossed_with(name + ".right", d.right(), name + ".A");
    add_map(name + ".Q", d.q_map());
    insert_unique(iteration, "iteration datum", name, IterationRef{name + ".left", name + ".right", name + ".Q"},
                  std::equal_to<>{});
}

const Space& Bundle::space(const std::string& name) const { return find_ref(spaces, name); }
const Algebra& Bundle::algebra(const std::string& name) const { return find_ref(algebras, name); }
const MultiLinMap& Bundle::map(const std::string& name) const { return find_ref(maps, name); }

TwistingMap Bundle::twisting_map(const std::string& name) const {
    const auto& ref = find_ref(twisting, name);
    return TwistingMap(algebra(ref.a), algebra(ref.b), map(ref.map));
}

CrossedData Bundle::crossed_data(const std::string& name) const {
    const auto& ref = find_ref(crossed, name);
    return CrossedData(algebra(ref.alg), PointedSpace(space(ref.space), ref.point), map(ref.r_map), map(ref.sigma));
}

IterationData Bundle::iteration_data(const std::string& name) const {
    const auto& ref = find_ref(iteration, name);
    return IterationData(crossed_data(ref.left), crossed_data(ref.right), map(ref.q_map));
}

bool Bundle::operator==(const Bundle& other) const {
    auto same_maps = [](const auto& x, const auto& y) {
        return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin(), [](const auto& a, const auto& b) {
                   return a.first == b.first && identical(a.second, b.second);
               });
    };
    return spaces == other.spaces && algebras == other.algebras && same_maps(maps, other.maps) &&
           twisting == other.twisting && crossed == other.crossed && iteration == other.iteration;
}

// ---------------------------------------------------------------- reading

namespace {

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& where, const std::string& message) const {
        throw FormatError(origin_, where, message);
    }

    const json& field(const json& obj, const char* key, const std::string& where) const {
        if (!obj.is_object()) fail(where, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
        return *it;
    }

    std::string string(const json& j, const std::string& where) const {
        if (!j.is_string()) fail(where, "expected a string");
        return j.get<std::string>();
    }

    Scalar scalar(const json& j, const std::string& where) const {
        if (j.is_number_integer()) {
            return j.is_number_unsigned() ? Scalar(mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>()))))
                                          : Scalar(static_cast<long>(j.get<std::int64_t>()));
        }
        if (j.is_string()) {
            try {
                return Scalar::parse(j.get<std::string>());
            } catch (const Error& e) {
                fail(where, e.what());
            }
        }
        fail(where, "expected an integer or a \"p/q\" string");
    }

    Vector vector(const json& j, const std::string& where) const {
        if (!j.is_array()) fail(where, "expected an array of scalars");
        Vector out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], where + "[" + std::to_string(i) + "]"));
        return out;
    }

    std::vector<Scalar> matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) const {
        if (!j.is_array()) fail(where, "expected an array of rows");
        if (j.size() != rows) {
            fail(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
        }
        std::vector<Scalar> out;
        out.reserve(rows * cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const std::string at = where + "[" + std::to_string(r) + "]";
            Vector row = vector(j[r], at);
            if (row.size() != cols) {
                fail(at, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
            }
            for (auto& s : row) out.push_back(std::move(s));
        }
        return out;
    }

    Factors factors(const json& j, const Bundle& b, const std::string& where) const {
        if (!j.is_array()) fail(where, "expected an array of space names");
        Factors out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(b.space(string(j[i], where + "[" + std::to_string(i) + "]")));
        return out;
    }

private:
    std::string origin_;
};

const json* section(const json& doc, const char* key) {
    auto it = doc.find(key);
    return it == doc.end() ? nullptr : &*it;
}

}  // namespace

Bundle parse_bundle(std::string_view text, const std::string& origin) {
    Reader rd(origin);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        rd.fail("byte " + std::to_string(e.byte), "malformed JSON");
    }
    if (!doc.is_object()) rd.fail("top level", "expected an object");
    static const std::vector<std::string> kSections{"spaces", "algebras", "maps", "twisting", "crossed", "iteration"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(kSections.begin(), kSections.end(), key) == kSections.end()) rd.fail(key, "unknown section");
        if (!value.is_object()) rd.fail(key, "section must be an object");
    }

    Bundle b;
    if (const json* s = section(doc, "spaces")) {
        for (const auto& [name, entry] : s->items()) {
            const std::string where = "spaces." + name;
            const json& dim = rd.field(entry, "dim", where);
            const json& labels = rd.field(entry, "labels", where);
            if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) rd.fail(where + ".dim", "expected a positive integer");
            if (!labels.is_array()) rd.fail(where + ".labels", "expected an array of strings");
            std::vector<std::string> ls;
            for (std::size_t i = 0; i < labels.size(); ++i)
                ls.push_back(rd.string(labels[i], where + ".labels[" + std::to_string(i) + "]"));
            if (ls.size() != dim.get<std::size_t>()) rd.fail(where, "dim does not match the number of labels");
            try {
                b.spaces.emplace(name, Space(name, std::move(ls)));
            } catch (const Error& e) {
                rd.fail(where, e.what());
            }
        }
    }
    if (const json* s = section(doc, "algebras")) {
        for (const auto& [name, entry] : s->items()) {
            const std::string where = "algebras." + name;
            const Space& space = b.space(rd.string(rd.field(entry, "space", where), where + ".space"));
            const std::size_t d = space.dim();
            auto mult = rd.matrix(rd.field(entry, "mult", where), d, d * d, where + ".mult");
            Vector unit = rd.vector(rd.field(entry, "unit", where), where + ".unit");
            if (unit.size() != d) rd.fail(where + ".unit", "expected " + std::to_string(d) + " entries");
            b.algebras.emplace(name, Algebra(space, MultiLinMap({space, space}, {space}, std::move(mult)), std::move(unit)));
        }
    }
    if (const json* s = section(doc, "maps")) {
        for (const auto& [name, entry] : s->items()) {
            const std::string where = "maps." + name;
            Factors dom = rd.factors(rd.field(entry, "domain", where), b, where + ".domain");
            Factors cod = rd.factors(rd.field(entry, "codomain", where), b, where + ".codomain");
            auto m = rd.matrix(rd.field(entry, "matrix", where), total_dim(cod), total_dim(dom), where + ".matrix");
            b.maps.emplace(name, MultiLinMap(std::move(dom), std::move(cod), std::move(m)));
        }
    }
    auto ref = [&rd](const json& entry, const char* key, const std::string& where) {
        return rd.string(rd.field(entry, key, where), where + "." + key);
    };
    if (const json* s = section(doc, "twisting")) {
        for (const auto& [name, entry] : s->items()) {
            const std::string where = "twisting." + name;
            b.twisting.emplace(name, Bundle::TwistingRef{ref(entry, "a", where), ref(entry, "b", where),
                                                         ref(entry, "map", where)});
        }
    }
    if (const json* s = section(doc, "crossed")) {
        for (const auto& [name, entry] : s->items()) {
            const std::string where = "crossed." + name;
            const json& pt = rd.field(entry, "pointed", where);
            b.crossed.emplace(name, Bundle::CrossedRef{ref(entry, "alg", where), ref(pt, "space", where + ".pointed"),
                                                       rd.vector(rd.field(pt, "point", where + ".pointed"),
                                                                 where + ".pointed.point"),
                                                       ref(entry, "r_map", where), ref(entry, "sigma", where)});
        }
    }
    if (const json* s = section(doc, "iteration")) {
        for (const auto& [name, entry] : s->items()) {
            const std::string where = "iteration." + name;
            b.iteration.emplace(name, Bundle::IterationRef{ref(entry, "left", where), ref(entry, "right", where),
                                                           ref(entry, "q_map", where)});
        }
    }

    // Resolve every composite object once so that dimension errors surface at load time.
    auto validate = [&rd](const std::string& where, auto&& build) {
        try {
            build();
        } catch (const RefError&) {
            throw;
        } catch (const Error& e) {
            rd.fail(where, e.what());
        }
    };
    for (const auto& [name, _] : b.twisting) validate("twisting." + name, [&] { (void)b.twisting_map(name); });
    for (const auto& [name, _] : b.crossed) validate("crossed." + name, [&] { (void)b.crossed_data(name); });
    for (const auto& [name, _] : b.iteration) validate("iteration." + name, [&] { (void)b.iteration_data(name); });
    return b;
}

Bundle load_bundle(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return parse_bundle(text.str(), path.string());
}

// ---------------------------------------------------------------- writing

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string scalar_text(const Scalar& s) {
    if (auto v = s.as_long()) return std::to_string(*v);
    return quoted(s.to_string());
}

std::string vector_text(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
    return out + "]";
}

std::string names_text(const Factors& factors) {
    std::string out = "[";
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? ", " : "") + quoted(factors[i].name());
    return out + "]";
}

void write_matrix(std::string& out, const std::string& indent, const std::vector<Scalar>& entries, std::size_t rows,
                  std::size_t cols) {
    out += "[\n";
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row(entries.begin() + static_cast<std::ptrdiff_t>(r * cols),
                   entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
        out += indent + "  " + vector_text(row) + (r + 1 < rows ? ",\n" : "\n");
    }
    out += indent + "]";
}

template <class T, class Body>
void write_section(std::string& out, const char* key, const std::map<std::string, T>& entries, bool last, Body body) {
    out += "  " + quoted(key) + ": {";
    if (entries.empty()) {
        out += "}";
    } else {
        out += "\n";
        std::size_t i = 0;
        for (const auto& [name, value] : entries) {
            out += "    " + quoted(name) + ": ";
            body(value);
            out += ++i < entries.size() ? ",\n" : "\n";
        }
        out += "  }";
    }
    out += last ? "\n" : ",\n";
}

}  // namespace

std::string dump_bundle(const Bundle& b) {
    std::string out = "{\n";
    write_section(out, "spaces", b.spaces, false, [&](const Space& s) {
        out += "{\"dim\": " + std::to_string(s.dim()) + ", \"labels\": [";
        for (std::size_t i = 0; i < s.dim(); ++i) out += (i ? ", " : "") + quoted(s.label(i));
        out += "]}";
    });
    write_section(out, "algebras", b.algebras, false, [&](const Algebra& a) {
        out += "{\n      \"space\": " + quoted(a.space().name()) + ",\n      \"mult\": ";
        write_matrix(out, "      ", a.mult().entries(), a.mult().rows(), a.mult().cols());
        out += ",\n      \"unit\": " + vector_text(a.unit()) + "\n    }";
    });
    write_section(out, "maps", b.maps, false, [&](const MultiLinMap& m) {
        out += "{\n      \"domain\": " + names_text(m.domain()) + ",\n      \"codomain\": " + names_text(m.codomain()) +
               ",\n      \"matrix\": ";
        write_matrix(out, "      ", m.entries(), m.rows(), m.cols());
        out += "\n    }";
    });
    write_section(out, "twisting", b.twisting, false, [&](const Bundle::TwistingRef& t) {
        out += "{\"a\": " + quoted(t.a) + ", \"b\": " + quoted(t.b) + ", \"map\": " + quoted(t.map) + "}";
    });
    write_section(out, "crossed", b.crossed, false, [&](const Bundle::CrossedRef& c) {
        out += "{\"alg\": " + quoted(c.alg) + ", \"pointed\": {\"space\": " + quoted(c.space) +
               ", \"point\": " + vector_text(c.point) + "}, \"r_map\": " + quoted(c.r_map) +
               ", \"sigma\": " + quoted(c.sigma) + "}";
    });
    write_section(out, "iteration", b.iteration, true, [&](const Bundle::IterationRef& it) {
        out += "{\"left\": " + quoted(it.left) + ", \"right\": " + quoted(it.right) + ", \"q_map\": " +
               quoted(it.q_map) + "}";
    });
    return out + "}\n";
}

void save_bundle(const Bundle& bundle, const std::filesystem::path& path) {
    const std::string text = dump_bundle(bundle);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("error writing '" + path.string() + "'");
}

// ---------------------------------------------------------------- corpus export

namespace {

bool add_instance(Bundle& b, const std::string& only) {
    bool found = false;
    auto wanted = [&](const std::string& name) {
        const bool hit = only.empty() || only == name;
        found = found || hit;
        return hit;
    };
    for (const auto& i : bundled_algebras())
        if (wanted(i.name)) b.add_algebra(i.name, i.data);
    for (const auto& i : bundled_twisting_maps())
        if (wanted(i.name)) b.add_twisting(i.name, i.data);
    for (const auto& i : bundled_crossed())
        if (wanted(i.name)) b.add_crossed(i.name, i.data);
    for (const auto& i : bundled_iterations())
        if (wanted(i.name)) b.add_iteration(i.name, i.data);
    return found;
}

}  // namespace

Bundle corpus_bundle() {
    Bundle b;
    add_instance(b, "");
    return b;
}

Bundle instance_bundle(const std::string& name) {
    Bundle b;
    if (!add_instance(b, name)) throw RefError(name);
    return b;
}

}  // namespace crossprod
