#pragma once

// Certificate serialization. The layout is fixed so that byte-identical
// round trips are possible: seed first with its plane list, then the steps
// in order, each with kind, the involved normals, the exponent tuples, and
// the evidence block for its kind. Scalars are integers or strings only.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "freearr/theorems.hpp"

namespace freearr {

using ojson = nlohmann::ordered_json;

namespace certio {

inline long to_long(const Integer& v) {
    if (!v.fits_slong_p()) throw std::runtime_error("certificate: integer out of range");
    return v.get_si();
}

inline ojson int_vec(const IntVec& v) {
    ojson a = ojson::array();
    for (const Integer& x : v) a.push_back(to_long(x));
    return a;
}

inline ojson int_vecs(const std::vector<IntVec>& vs) {
    ojson a = ojson::array();
    for (const IntVec& v : vs) a.push_back(int_vec(v));
    return a;
}

inline IntVec int_vec_from(const ojson& j) {
    if (!j.is_array()) throw std::runtime_error("certificate: expected an integer array");
    IntVec v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::runtime_error("certificate: non-integer entry");
        v.emplace_back(e.get<long>());
    }
    return v;
}

inline std::vector<IntVec> int_vecs_from(const ojson& j) {
    if (!j.is_array()) throw std::runtime_error("certificate: expected an array of arrays");
    std::vector<IntVec> out;
    for (const auto& e : j) out.push_back(int_vec_from(e));
    return out;
}

template <typename T>
inline std::vector<T> ints_from(const ojson& j) {
    if (!j.is_array()) throw std::runtime_error("certificate: expected an integer array");
    std::vector<T> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::runtime_error("certificate: non-integer entry");
        out.push_back(static_cast<T>(e.get<long>()));
    }
    return out;
}

}  // namespace certio

inline ojson certificate_to_json(const Certificate& cert) {
    ojson root;
    ojson seed;
    if (!cert.seed.family.empty()) seed["family"] = cert.seed.family;
    if (!cert.seed.file.empty()) seed["file"] = cert.seed.file;
    seed["dim"] = cert.seed.dim;
    seed["hyperplanes"] = certio::int_vecs(cert.seed.hyperplanes);
    seed["verdict"] = cert.seed.verdict;
    seed["exponents"] = cert.seed.exponents;
    root["seed"] = seed;

    ojson steps = ojson::array();
    for (const CertificateStep& st : cert.steps) {
        ojson s;
        s["kind"] = step_kind_name(st.kind);
        s["hyperplanes"] = certio::int_vecs(st.hyperplanes);
        s["before"] = st.before;
        s["after"] = st.after;
        ojson ev;
        ev["card_before"] = st.evidence.card_before;
        ev["card_after"] = st.evidence.card_after;
        switch (st.kind) {
            case StepKind::MAT:
            case StepKind::MAT2:
            case StepKind::MDT:
            case StepKind::MAT2Subset:
            case StepKind::MDTSubset:
                ev["restriction_cards"] = st.evidence.restriction_cards;
                ev["codim_x"] = st.evidence.codim_x;
                if (st.kind == StepKind::MAT2Subset || st.kind == StepKind::MDTSubset)
                    ev["subset"] = st.evidence.subset;
                break;
            case StepKind::MRTCount:
                ev["flat_members"] = certio::int_vecs(st.evidence.flat_members);
                ev["flat_codim"] = st.evidence.flat_codim;
                ev["restriction_count"] = st.evidence.restriction_count;
                ev["restricted_exponents"] = st.evidence.restricted_exponents;
                break;
            case StepKind::AdditionDeletion:
                ev["restriction_cards"] = st.evidence.restriction_cards;
                ev["direction"] = st.evidence.direction;
                ev["restriction_exponents"] = st.evidence.restriction_exponents;
                if (st.evidence.direction == 0)
                    ev["aux_exponents"] = st.evidence.aux_exponents;
                break;
        }
        s["evidence"] = ev;
        steps.push_back(s);
    }
    root["steps"] = steps;
    return root;
}

inline std::string certificate_to_string(const Certificate& cert) {
    return certificate_to_json(cert).dump(2) + "\n";
}

inline Certificate certificate_from_json(const ojson& root) {
    try {
        Certificate cert;
        const ojson& seed = root.at("seed");
        cert.seed.family = seed.value("family", std::string());
        cert.seed.file = seed.value("file", std::string());
        cert.seed.dim = seed.at("dim").get<size_t>();
        cert.seed.hyperplanes = certio::int_vecs_from(seed.at("hyperplanes"));
        cert.seed.verdict = seed.at("verdict").get<std::string>();
        cert.seed.exponents = certio::ints_from<int>(seed.at("exponents"));
        for (const auto& s : root.at("steps")) {
            CertificateStep st;
            auto kind = parse_step_kind(s.at("kind").get<std::string>());
            if (!kind) throw std::runtime_error("certificate: unknown step kind");
            st.kind = *kind;
            st.hyperplanes = certio::int_vecs_from(s.at("hyperplanes"));
            st.before = certio::ints_from<int>(s.at("before"));
            st.after = certio::ints_from<int>(s.at("after"));
            const ojson& ev = s.at("evidence");
            st.evidence.card_before = ev.at("card_before").get<long>();
            st.evidence.card_after = ev.at("card_after").get<long>();
            switch (st.kind) {
                case StepKind::MAT:
                case StepKind::MAT2:
                case StepKind::MDT:
                case StepKind::MAT2Subset:
                case StepKind::MDTSubset:
                    st.evidence.restriction_cards = certio::ints_from<long>(
                        ev.at("restriction_cards"));
                    st.evidence.codim_x = ev.at("codim_x").get<long>();
                    if (st.kind == StepKind::MAT2Subset || st.kind == StepKind::MDTSubset)
                        st.evidence.subset = certio::ints_from<size_t>(ev.at("subset"));
                    break;
                case StepKind::MRTCount:
                    st.evidence.flat_members = certio::int_vecs_from(ev.at("flat_members"));
                    st.evidence.flat_codim = ev.at("flat_codim").get<long>();
                    st.evidence.restriction_count = ev.at("restriction_count").get<long>();
                    st.evidence.restricted_exponents = certio::ints_from<int>(
                        ev.at("restricted_exponents"));
                    break;
                case StepKind::AdditionDeletion:
                    st.evidence.restriction_cards = certio::ints_from<long>(
                        ev.at("restriction_cards"));
                    st.evidence.direction = ev.at("direction").get<int>();
                    st.evidence.restriction_exponents = certio::ints_from<int>(
                        ev.at("restriction_exponents"));
                    if (st.evidence.direction == 0)
                        st.evidence.aux_exponents = certio::ints_from<int>(
                            ev.at("aux_exponents"));
                    break;
            }
            cert.steps.push_back(std::move(st));
        }
        return cert;
    } catch (const ojson::exception& e) {
        throw std::runtime_error(std::string("certificate: ") + e.what());
    }
}

inline Certificate certificate_from_string(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::exception& e) {
        throw std::runtime_error(std::string("certificate: ") + e.what());
    }
    return certificate_from_json(j);
}

}  // namespace freearr
