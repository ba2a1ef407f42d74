#include "twistor/catalog.hpp"

#include "twistor/errors.hpp"
#include "twistor/exterior.hpp"

namespace twistor {

namespace {

RationalFunction fiber_p() { return RationalFunction(1) + RationalFunction::m() * RationalFunction::mb(); }

std::array<Form, 3> paper_coframe() {
    const Form s1 = Form::generator(gen::s1);
    const Form s2 = Form::generator(gen::s2);
    const RationalFunction mb = RationalFunction::mb();
    const Form omega_0 = s1.scaled(mb) + s2;
    const Form omega_2 = s2.scaled(mb) - s1;
    const Form dm_scaled = Form::generator(gen::dm).scaled(RationalFunction(1) / fiber_p());
    return {omega_0, omega_2, dm_scaled};
}

}  // namespace

const Catalog& Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

Catalog::Catalog()
    : metric_(paper_coframe(), {RationalFunction(2), RationalFunction(2), RationalFunction(2)}) {
    const RationalFunction m = RationalFunction::m();
    const RationalFunction mb = RationalFunction::mb();
    const RationalFunction i = RationalFunction::i();
    const RationalFunction p = fiber_p();
    const Form s1 = Form::generator(gen::s1);
    const Form s2 = Form::generator(gen::s2);
    const Form dm = Form::generator(gen::dm);
    const Form sb1 = Form::generator(gen::sb1);
    const Form sb2 = Form::generator(gen::sb2);
    const Form dmb = Form::generator(gen::dmb);

    // Omega_bar forms from their dz expressions, reduced to the chart;
    // this is the independent route used by the identity pairs.
    const RationalFunction inv_p = RationalFunction(1) / p;
    const DzForm omega_bar_1_dz =
        (DzForm::generator(gen::dzb1).scaled(mb) - DzForm::generator(gen::dz2)).scaled(inv_p);
    const DzForm omega_bar_2_dz =
        (DzForm::generator(gen::dzb2).scaled(mb) + DzForm::generator(gen::dz1)).scaled(inv_p);
    const Form Ob1 = from_dz(omega_bar_1_dz);
    const Form Ob2 = from_dz(omega_bar_2_dz);
    const Form O1 = Ob1.conj();
    const Form O2 = Ob2.conj();

    auto add = [this](const std::string& name, Form value, std::string source,
                      std::vector<std::pair<std::string, bool>> expected) {
        auto bd = value.bidegree();
        CatalogEntry e{name, std::move(value), std::move(source),
                       bd.value_or(std::pair<int, int>{-1, -1}), std::move(expected)};
        entries_.emplace(name, std::move(e));
    };

    // frame forms
    add("sigma_1", s1, "holomorphic coframe entry, chart U2", {{"del_closed", true}});
    add("sigma_2", s2, "holomorphic coframe entry, chart U2", {{"del_closed", true}});
    add("sigma_bar_1", sb1, "antiholomorphic coframe entry, chart U2", {{"delbar_closed", true}});
    add("sigma_bar_2", sb2, "antiholomorphic coframe entry, chart U2", {{"delbar_closed", true}});
    add("dm", dm, "fiber coordinate differential", {{"d_closed", true}});
    add("dmb", dmb, "conjugate fiber coordinate differential", {{"d_closed", true}});
    add("Omega_bar_1", Ob1, "twisted (0,1)-form Omega_bar_1, chart reduction",
        {{"delbar_closed", true}});
    add("Omega_bar_2", Ob2, "twisted (0,1)-form Omega_bar_2, chart reduction",
        {{"delbar_closed", true}});

    // omega_bar_k and conjugates
    const Form ob0 = sb1.scaled(m) + sb2;
    const Form ob1 = (sb1.scaled(m) - sb2).scaled(i);
    const Form ob2 = sb2.scaled(m) - sb1;
    const Form ob3 = (sb1 + sb2.scaled(m)).scaled(i);
    add("omega_bar_0", ob0, "H^{0,1} frame form omega_bar_0", {{"delbar_closed", true}});
    add("omega_bar_1", ob1, "H^{0,1} frame form omega_bar_1", {{"delbar_closed", true}});
    add("omega_bar_2", ob2, "H^{0,1} frame form omega_bar_2", {{"delbar_closed", true}});
    add("omega_bar_3", ob3, "H^{0,1} frame form omega_bar_3", {{"delbar_closed", true}});
    add("omega_0", ob0.conj(), "conjugate of omega_bar_0; metric coframe entry",
        {{"del_closed", true}});
    add("omega_1", ob1.conj(), "conjugate of omega_bar_1", {{"del_closed", true}});
    add("omega_2", ob2.conj(), "conjugate of omega_bar_2; metric coframe entry",
        {{"del_closed", true}});
    add("omega_3", ob3.conj(), "conjugate of omega_bar_3", {{"del_closed", true}});

    // H^{0,1} representatives: lambda_i Omega_bar_j in the chart
    auto closed_harmonic = [] {
        return std::vector<std::pair<std::string, bool>>{{"delbar_closed", true},
                                                         {"delbar_harmonic", true}};
    };
    add("h01_rep_l1o1", sb1.scaled(m), "H^{0,1} representative lambda1*Omega_bar_1",
        closed_harmonic());
    add("h01_rep_l1o2", sb2.scaled(m), "H^{0,1} representative lambda1*Omega_bar_2",
        closed_harmonic());
    add("h01_rep_l2o1", sb1, "H^{0,1} representative lambda2*Omega_bar_1", closed_harmonic());
    add("h01_rep_l2o2", sb2, "H^{0,1} representative lambda2*Omega_bar_2", closed_harmonic());
    groups_["h01"] = {"h01_rep_l1o1", "h01_rep_l1o2", "h01_rep_l2o1", "h01_rep_l2o2"};

    // H^{0,2} representatives
    const Form sb12 = wedge(sb1, sb2);
    add("h02_rep_l1l1", sb12.scaled(m * m),
        "H^{0,2} representative lambda1*Omega_bar_1 ^ lambda1*Omega_bar_2", closed_harmonic());
    add("h02_rep_l2l2", sb12, "H^{0,2} representative lambda2*Omega_bar_1 ^ lambda2*Omega_bar_2",
        closed_harmonic());
    add("h02_rep_l1l2", sb12.scaled(m),
        "H^{0,2} representative lambda1*Omega_bar_1 ^ lambda2*Omega_bar_2", closed_harmonic());
    groups_["h02"] = {"h02_rep_l1l1", "h02_rep_l2l2", "h02_rep_l1l2"};

    // H^{1,1} representatives
    const Form fs = wedge(dm, dmb).scaled(RationalFunction(1) / (p * p));
    const Form eta1 = wedge(s1, sb2).scaled(p);
    const Form eta2 = wedge(s2, sb1).scaled(p);
    const Form eta3 = (wedge(s1, sb1) - wedge(s2, sb2)).scaled(p);
    // The Fubini-Study representative is d-closed but not Dolbeault-harmonic
    // for this metric: astar(fs) is supported away from dm^dmb and its delbar
    // does not vanish. The harmonic representative of its class is astar(beta).
    add("h11_rep_fs", fs, "H^{1,1} representative: Fubini-Study form of the fiber",
        {{"delbar_closed", true},
         {"d_closed", true},
         {"delbar_harmonic", false},
         {"bc_harmonic", false}});
    auto h11_props = [] {
        return std::vector<std::pair<std::string, bool>>{{"delbar_closed", true},
                                                         {"d_closed", true},
                                                         {"delbar_harmonic", true},
                                                         {"bc_harmonic", true}};
    };
    add("h11_rep_12", eta1, "H^{1,1} representative (|l1|^2+|l2|^2) Omega_1 ^ Omega_bar_2",
        h11_props());
    add("h11_rep_21", eta2, "H^{1,1} representative (|l1|^2+|l2|^2) Omega_2 ^ Omega_bar_1",
        h11_props());
    add("h11_rep_diag", eta3,
        "H^{1,1} representative (|l1|^2+|l2|^2)(Omega_1^Omega_bar_1 - Omega_2^Omega_bar_2)",
        h11_props());
    groups_["h11"] = {"h11_rep_fs", "h11_rep_12", "h11_rep_21", "h11_rep_diag"};

    add("eta_1", eta1, "first non-FS H^{1,1} representative", h11_props());
    add("eta_2", eta2, "second non-FS H^{1,1} representative", h11_props());
    add("eta_3", eta3, "third non-FS H^{1,1} representative", h11_props());
    groups_["eta"] = {"eta_1", "eta_2", "eta_3"};

    // H^{1,2} representatives
    auto h12_props = [] {
        return std::vector<std::pair<std::string, bool>>{
            {"delbar_closed", true}, {"delbar_harmonic", true}, {"aeppli_harmonic", true}};
    };
    const Form w112 = wedge(s1, sb12);
    const Form w212 = wedge(s2, sb12);
    add("h12_rep_o1_l1", w112.scaled(p * m),
        "H^{1,2} representative (|l1|^2+|l2|^2) lambda1 Omega_1 ^ Omega_bar_1 ^ Omega_bar_2",
        h12_props());
    add("h12_rep_o1_l2", w112.scaled(p),
        "H^{1,2} representative (|l1|^2+|l2|^2) lambda2 Omega_1 ^ Omega_bar_1 ^ Omega_bar_2",
        h12_props());
    add("h12_rep_o2_l1", w212.scaled(p * m),
        "H^{1,2} representative (|l1|^2+|l2|^2) lambda1 Omega_2 ^ Omega_bar_1 ^ Omega_bar_2",
        h12_props());
    add("h12_rep_o2_l2", w212.scaled(p),
        "H^{1,2} representative (|l1|^2+|l2|^2) lambda2 Omega_2 ^ Omega_bar_1 ^ Omega_bar_2",
        h12_props());
    groups_["h12"] = {"h12_rep_o1_l1", "h12_rep_o1_l2", "h12_rep_o2_l1", "h12_rep_o2_l2"};

    // beta and the extra Aeppli pair
    const Form beta = wedge(wedge(s1, sb1), wedge(s2, sb2)).scaled(p * p);
    add("beta", beta, "(2,2)-form (|l1|^2+|l2|^2)^2 Omega_1^Omega_bar_1^Omega_2^Omega_bar_2",
        {{"delbar_closed", true}, {"d_closed", true}, {"delbar_harmonic", true}});
    add("aeppli_extra_1", wedge(s1, sb1).scaled(m * mb) - wedge(s2, sb2),
        "deldelbar-closed (1,1)-form l1b*Omega_1^l1*Omega_bar_1 - l2b*Omega_2^l2*Omega_bar_2",
        {{"deldelbar_closed", true}});
    add("aeppli_extra_2", wedge(s1, sb1) - wedge(s2, sb2).scaled(m * mb),
        "deldelbar-closed (1,1)-form l2b*Omega_1^l2*Omega_bar_1 - l1b*Omega_2^l1*Omega_bar_2",
        {{"deldelbar_closed", true}});
    groups_["aeppli_extra"] = {"aeppli_extra_1", "aeppli_extra_2"};

    // identity pairs: direct chart expressions vs the dz-frame route
    omega_pairs_ = {
        {"omega_bar_0", ob0, Ob1.scaled(m) + Ob2},
        {"omega_bar_1", ob1, (Ob1.scaled(m) - Ob2).scaled(i)},
        {"omega_bar_2", ob2, Ob2.scaled(m) - Ob1},
        {"omega_bar_3", ob3, (Ob2.scaled(m) + Ob1).scaled(i)},
    };
    reduction_pairs_ = {
        {"l1_Omega_bar_1", Ob1.scaled(m), sb1.scaled(m)},
        {"l1_Omega_bar_2", Ob2.scaled(m), sb2.scaled(m)},
        {"l2_Omega_bar_1", Ob1, sb1},
        {"l2_Omega_bar_2", Ob2, sb2},
    };
    h11_expansions_ = {
        {"h11_rep_12", wedge(O1, Ob2).scaled(p),
         wedge(O1.scaled(mb), Ob2.scaled(m)) + wedge(O1, Ob2)},
        {"h11_rep_21", wedge(O2, Ob1).scaled(p),
         wedge(O2.scaled(mb), Ob1.scaled(m)) + wedge(O2, Ob1)},
        {"h11_rep_diag", (wedge(O1, Ob1) - wedge(O2, Ob2)).scaled(p),
         wedge(O1.scaled(mb), Ob1.scaled(m)) + wedge(O1, Ob1) - wedge(O2, Ob2) -
             wedge(O2.scaled(mb), Ob2.scaled(m))},
    };
    const Form Obb = wedge(Ob1, Ob2);
    h12_expansions_ = {
        {"h12_rep_o1_l1", wedge(O1, Obb).scaled(p * m),
         wedge(O1.scaled(mb), wedge(Ob1.scaled(m), Ob2.scaled(m))) +
             wedge(O1, wedge(Ob1.scaled(m), Ob2))},
        {"h12_rep_o1_l2", wedge(O1, Obb).scaled(p),
         wedge(O1.scaled(mb), wedge(Ob1.scaled(m), Ob2)) + wedge(O1, Obb)},
        {"h12_rep_o2_l1", wedge(O2, Obb).scaled(p * m),
         wedge(O2.scaled(mb), wedge(Ob1.scaled(m), Ob2.scaled(m))) +
             wedge(O2, wedge(Ob1.scaled(m), Ob2))},
        {"h12_rep_o2_l2", wedge(O2, Obb).scaled(p),
         wedge(O2.scaled(mb), wedge(Ob1.scaled(m), Ob2)) + wedge(O2, Obb)},
    };
}

const CatalogEntry& Catalog::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it != entries_.end()) return it->second;
    std::string msg = "unknown catalog name '" + name + "'; registered:";
    for (const auto& [n, e] : entries_) msg += " " + n;
    throw UnknownNameError(msg);
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [n, e] : entries_) out.push_back(n);
    return out;
}

const std::vector<std::string>& Catalog::group(const std::string& key) const {
    auto it = groups_.find(key);
    if (it == groups_.end()) throw UnknownNameError("unknown catalog group '" + key + "'");
    return it->second;
}

}  // namespace twistor
