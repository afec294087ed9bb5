#include "bicross/workspace.hpp"

#include <fstream>
#include <stdexcept>

namespace bicross {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << bytes;
}

} // namespace

Workspace::Workspace(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
    if (!fs::exists(manifest_path())) write_manifest(Json{{"objects", Json::object()}});
}

Json Workspace::manifest() const { return Json::parse(slurp(manifest_path())); }

void Workspace::write_manifest(const Json& m) const { spit(manifest_path(), m.dump(2) + "\n"); }

void Workspace::put(const std::string& name, const std::string& kind, const Json& value) {
    if (name.empty() || name.find('/') != std::string::npos)
        throw std::invalid_argument("workspace: bad object name '" + name + "'");
    std::string bytes = value.dump(2) + "\n";
    spit(dir_ / (name + ".json"), bytes);
    Json m = manifest();
    m["objects"][name] = Json{{"kind", kind}, {"file", name + ".json"}, {"hash", fnv1a_hex(bytes)}};
    write_manifest(m);
}

bool Workspace::has(const std::string& name) const {
    Json m = manifest();
    return m.at("objects").contains(name);
}

std::string Workspace::kind_of(const std::string& name) const {
    Json m = manifest();
    if (!m.at("objects").contains(name))
        throw std::invalid_argument("workspace: no object named '" + name + "'");
    return m.at("objects").at(name).at("kind").get<std::string>();
}

Json Workspace::get_raw(const std::string& name, const std::string& expected_kind) const {
    Json m = manifest();
    if (!m.at("objects").contains(name))
        throw std::invalid_argument("workspace: no object named '" + name + "'");
    const Json& entry = m.at("objects").at(name);
    std::string kind = entry.at("kind").get<std::string>();
    if (!expected_kind.empty() && kind != expected_kind)
        throw std::invalid_argument("workspace: '" + name + "' has kind " + kind + ", wanted " +
                                    expected_kind);
    std::string bytes = slurp(dir_ / entry.at("file").get<std::string>());
    if (fnv1a_hex(bytes) != entry.at("hash").get<std::string>())
        throw std::runtime_error("workspace: content hash mismatch for '" + name + "'");
    return Json::parse(bytes);
}

Json Workspace::get(const std::string& name, const std::string& expected_kind) const {
    Json value = get_raw(name, expected_kind);
    validate_payload(kind_of(name), value);
    return value;
}

std::vector<std::string> Workspace::names() const {
    Json m = manifest();
    std::vector<std::string> out;
    for (auto it = m.at("objects").begin(); it != m.at("objects").end(); ++it)
        out.push_back(it.key());
    std::sort(out.begin(), out.end());
    return out;
}

void validate_payload(const std::string& kind, const Json& value) {
    if (kind == "group") {
        group_from_json(value);
    } else if (kind == "factorization") {
        factorization_from_json(value);
    } else if (kind == "matched_pair") {
        matched_pair_from_json(value);
    } else if (kind == "cochain") {
        cochain_from_json(value);
    } else if (kind == "pair_cocycle") {
        PairCocycle pc = pair_cocycle_from_json(value);
        Report r = verify_pair(pc);
        if (!r.pass())
            throw std::invalid_argument("stored pair cocycle fails verification: " + r.summary());
    } else if (kind == "hopf") {
        StructureHopf h = hopf_from_json(value);
        Report r = verify_hopf(h);
        if (!r.pass())
            throw std::invalid_argument("stored hopf algebra fails verification: " + r.summary());
    } else if (kind == "quasi") {
        QuasiBialgebra q = quasi_from_json(value);
        Report r = verify_quasi(q);
        if (!r.pass())
            throw std::invalid_argument("stored quasi-bialgebra fails verification: " +
                                        r.summary());
    } else if (kind == "opext" || kind == "report" || kind == "note") {
        // structured outputs; shape is checked by consumers
    } else {
        throw std::invalid_argument("workspace: unknown kind '" + kind + "'");
    }
}

} // namespace bicross
