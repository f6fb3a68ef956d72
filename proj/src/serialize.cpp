#include "nakayama/serialize.hpp"

namespace nakayama {

using json = nlohmann::ordered_json;

json dimension_json(const ExtendedNat& d) {
    if (d.is_infinite()) return "inf";
    return d.value();
}

json dimension_json(const BoundedDim& d) {
    if (d.exceeded) return d.to_string();
    return d.value;
}

json module_json(const ModuleSum& m) {
    json out = json::array();
    for (const auto& u : m) out.push_back(to_string(u));
    return out;
}

json to_json(const ClassificationReport& r) {
    json j;
    j["kind"] = std::string(kind_name(r.algebra.kind()));
    j["c"] = r.algebra.lengths();
    j["gldim"] = dimension_json(r.gldim);
    j["domdim"] = dimension_json(r.domdim);
    j["id_left"] = dimension_json(r.id_left);
    j["id_right"] = dimension_json(r.id_right);
    j["gdim"] = r.gdim ? dimension_json(*r.gdim) : json("not-Gorenstein");
    j["selfinjective"] = r.selfinjective;
    j["auslander"] = r.auslander;
    j["m_auslander"] = r.m_auslander ? dimension_json(*r.m_auslander) : json(nullptr);
    j["one_aus_gorenstein"] = r.one_aus_gorenstein;
    j["dtr_selfinjective"] = r.dtr_selfinjective;
    j["tilting_exists"] = r.tilting_exists;
    j["t_c"] = r.t_c ? module_json(*r.t_c) : json(nullptr);
    j["c_c"] = r.c_c ? module_json(*r.c_c) : json(nullptr);
    j["tilting_cotilting"] = r.tilting_cotilting;
    return j;
}

json to_json(const StructureConstantAlgebra& a) {
    json basis = json::array();
    for (const auto& b : a.basis()) basis.push_back({b.source, b.target, b.k});
    json table = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& t : a.product(i, j)) table.push_back({i, j, t.index, t.coeff});
    return {{"dim", a.dim()}, {"idempotents", a.idempotents()}, {"basis", basis}, {"table", table}};
}

json to_json(const Resolution& r) { return {{"syzygy_dims", r.syzygy_dims}, {"pd", dimension_json(r.pd)}}; }

}  // namespace nakayama
