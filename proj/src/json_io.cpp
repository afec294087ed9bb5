#include "bicross/json_io.hpp"

#include <stdexcept>

namespace bicross {

Json to_json(const RootExp& r) { return Json{{"n", r.n}, {"N", r.N}}; }

RootExp rootexp_from_json(const Json& j) {
    return RootExp(j.at("n").get<long long>(), j.at("N").get<int>());
}

Json to_json(const CycloNum& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs())
        coeffs.push_back(Json::array({to_int64(num(r)), to_int64(den(r))}));
    return Json{{"N", c.torsion()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const Json& j) {
    int N = j.at("N").get<int>();
    std::vector<Rational> cs;
    for (const auto& e : j.at("coeffs"))
        cs.emplace_back(BigInt(e.at(0).get<long long>()), BigInt(e.at(1).get<long long>()));
    return CycloNum::from_coeffs(N, std::move(cs));
}

Json to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (int i = 0; i < g.order(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j));
        table.push_back(std::move(row));
    }
    return Json{{"order", g.order()}, {"table", table}, {"labels", g.labels()}};
}

FiniteGroup group_from_json(const Json& j) {
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    auto g = FiniteGroup::from_table(table, std::move(labels));
    if (j.contains("order") && j.at("order").get<int>() != g.order())
        throw std::invalid_argument("group json: order field disagrees with the table");
    return g;
}

Json to_json(const ExactFactorization& f) {
    return Json{{"sigma", to_json(f.sigma)}, {"F", f.F}, {"G", f.G}};
}

ExactFactorization factorization_from_json(const Json& j) {
    return make_factorization(group_from_json(j.at("sigma")), j.at("F").get<std::vector<int>>(),
                              j.at("G").get<std::vector<int>>());
}

Json to_json(const MatchedPair& mp) {
    Json ract = Json::array(), lact = Json::array();
    for (int g = 0; g < mp.G.order(); ++g) {
        Json r = Json::array(), l = Json::array();
        for (int x = 0; x < mp.F.order(); ++x) {
            r.push_back(mp.ract_at(g, x));
            l.push_back(mp.lact_at(g, x));
        }
        ract.push_back(std::move(r));
        lact.push_back(std::move(l));
    }
    return Json{{"F", to_json(mp.F)}, {"G", to_json(mp.G)}, {"ract", ract}, {"lact", lact}};
}

MatchedPair matched_pair_from_json(const Json& j) {
    MatchedPair mp;
    mp.F = group_from_json(j.at("F"));
    mp.G = group_from_json(j.at("G"));
    int nf = mp.F.order(), ng = mp.G.order();
    mp.ract.assign(static_cast<size_t>(ng) * nf, 0);
    mp.lact.assign(static_cast<size_t>(ng) * nf, 0);
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) {
            mp.ract[static_cast<size_t>(g) * nf + x] = j.at("ract").at(g).at(x).get<int>();
            mp.lact[static_cast<size_t>(g) * nf + x] = j.at("lact").at(g).at(x).get<int>();
        }
    Report rep = verify_matched_pair(mp);
    if (!rep.pass())
        throw std::invalid_argument("matched pair json fails verification: " + rep.summary());
    return mp;
}

Json to_json(const Cochain& c) {
    return Json{{"group", to_json(c.group)},
                {"degree", c.degree},
                {"N", c.N},
                {"values", c.values}};
}

Cochain cochain_from_json(const Json& j) {
    Cochain c = Cochain::zero(group_from_json(j.at("group")), j.at("degree").get<int>(),
                              j.at("N").get<int>());
    auto vals = j.at("values").get<std::vector<long>>();
    if (vals.size() != c.values.size())
        throw std::invalid_argument("cochain json: wrong number of values");
    for (size_t i = 0; i < vals.size(); ++i) c.values[i] = imod(vals[i], c.N);
    return c;
}

Json to_json(const PairCocycle& pc) {
    int nf = pc.mp.F.order(), ng = pc.mp.G.order();
    Json sigma = Json::array();
    for (int g = 0; g < ng; ++g) {
        Json a = Json::array();
        for (int x = 0; x < nf; ++x) {
            Json b = Json::array();
            for (int y = 0; y < nf; ++y) b.push_back(pc.sig(g, x, y));
            a.push_back(std::move(b));
        }
        sigma.push_back(std::move(a));
    }
    Json tau = Json::array();
    for (int x = 0; x < nf; ++x) {
        Json a = Json::array();
        for (int g = 0; g < ng; ++g) {
            Json b = Json::array();
            for (int h = 0; h < ng; ++h) b.push_back(pc.ta(x, g, h));
            a.push_back(std::move(b));
        }
        tau.push_back(std::move(a));
    }
    return Json{{"matched_pair", to_json(pc.mp)}, {"N", pc.N}, {"sigma", sigma}, {"tau", tau}};
}

PairCocycle pair_cocycle_from_json(const Json& j) {
    MatchedPair mp = matched_pair_from_json(j.at("matched_pair"));
    PairCocycle pc = PairCocycle::trivial(mp, j.at("N").get<int>());
    int nf = mp.F.order(), ng = mp.G.order();
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y)
                pc.set_sig(g, x, y, j.at("sigma").at(g).at(x).at(y).get<long>());
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                pc.set_tau(x, g, h, j.at("tau").at(x).at(g).at(h).get<long>());
    return pc;
}

namespace {

Json tensor_rows_to_json(const std::vector<std::vector<std::tuple<int, int, CycloNum>>>& rows) {
    Json out = Json::array();
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [a, b, c] : rows[i])
            out.push_back(Json::array({static_cast<int>(i), a, b, to_json(c)}));
    return out;
}

} // namespace

Json to_json(const StructureHopf& h) {
    Json mult = Json::array();
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            for (const auto& [k, c] : h.alg.prod(i, j))
                mult.push_back(Json::array({i, j, k, to_json(c)}));
    Json unit = Json::array(), counit = Json::array();
    for (const auto& c : h.alg.unit) unit.push_back(to_json(c));
    for (const auto& c : h.counit) counit.push_back(to_json(c));
    Json out{{"dim", h.dim()},   {"N", h.torsion()},
             {"mult", mult},     {"comult", tensor_rows_to_json(h.comult)},
             {"unit", unit},     {"counit", counit}};
    if (h.antipode) {
        Json S = Json::array();
        for (int i = 0; i < h.dim(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < h.dim(); ++j) row.push_back(to_json(h.antipode->at(i, j)));
            S.push_back(std::move(row));
        }
        out["antipode"] = S;
    } else {
        out["antipode"] = nullptr;
    }
    return out;
}

StructureHopf hopf_from_json(const Json& j) {
    StructureHopf h;
    int d = j.at("dim").get<int>();
    int N = j.at("N").get<int>();
    h.alg.dim = d;
    h.alg.N = N;
    h.alg.mult.assign(static_cast<size_t>(d) * d, {});
    {
        std::vector<std::map<int, CycloNum>> acc(static_cast<size_t>(d) * d);
        for (const auto& e : j.at("mult")) {
            int a = e.at(0).get<int>(), b = e.at(1).get<int>(), k = e.at(2).get<int>();
            CycloNum c = cyclo_from_json(e.at(3));
            auto& m = acc[static_cast<size_t>(a) * d + b];
            auto [it, fresh] = m.emplace(k, c);
            if (!fresh) it->second += c;
        }
        for (size_t i = 0; i < acc.size(); ++i) h.alg.mult[i] = sparse_normalize(acc[i]);
    }
    h.comult.assign(d, {});
    for (const auto& e : j.at("comult"))
        h.comult[e.at(0).get<int>()].emplace_back(e.at(1).get<int>(), e.at(2).get<int>(),
                                                  cyclo_from_json(e.at(3)));
    h.alg.unit.clear();
    for (const auto& e : j.at("unit")) h.alg.unit.push_back(cyclo_from_json(e));
    h.counit.clear();
    for (const auto& e : j.at("counit")) h.counit.push_back(cyclo_from_json(e));
    if (j.contains("antipode") && !j.at("antipode").is_null()) {
        CMat S(d, d, N);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) S.at(i, k) = cyclo_from_json(j.at("antipode").at(i).at(k));
        h.antipode = S;
    }
    return h;
}

Json to_json(const QuasiBialgebra& q) {
    Json out = to_json(q.h);
    int d = q.h.dim();
    Json assoc = Json::array(), assoc_inv = Json::array();
    for (const auto& [idx, c] : q.assoc) {
        long a = idx / (static_cast<long>(d) * d), rest = idx % (static_cast<long>(d) * d);
        assoc.push_back(Json::array({a, rest / d, rest % d, to_json(c)}));
    }
    for (const auto& [idx, c] : q.assoc_inv) {
        long a = idx / (static_cast<long>(d) * d), rest = idx % (static_cast<long>(d) * d);
        assoc_inv.push_back(Json::array({a, rest / d, rest % d, to_json(c)}));
    }
    out["assoc"] = assoc;
    out["assoc_inv"] = assoc_inv;
    return out;
}

QuasiBialgebra quasi_from_json(const Json& j) {
    QuasiBialgebra q;
    q.h = hopf_from_json(j);
    long d = q.h.dim();
    for (const auto& e : j.at("assoc"))
        q.assoc.emplace((e.at(0).get<long>() * d + e.at(1).get<long>()) * d + e.at(2).get<long>(),
                        cyclo_from_json(e.at(3)));
    for (const auto& e : j.at("assoc_inv"))
        q.assoc_inv.emplace(
            (e.at(0).get<long>() * d + e.at(1).get<long>()) * d + e.at(2).get<long>(),
            cyclo_from_json(e.at(3)));
    return q;
}

Json to_json(const Report& r) {
    Json v = Json::array();
    for (const auto& viol : r.violations)
        v.push_back(Json{{"law", viol.law}, {"witness", viol.witness}, {"detail", viol.detail}});
    return Json{{"subject", r.subject},
                {"pass", r.pass()},
                {"checks", r.checks},
                {"violation_count", r.violation_count},
                {"violations", v}};
}

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

} // namespace bicross
