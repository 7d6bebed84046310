#pragma once

// command line front end
//
// exit codes: 0 success (or certificate accepted), 2 malformed input,
// 3 inconclusive verdict, 4 unsupported family, 5 rejected check/replay

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freearr/certificate_io.hpp"
#include "freearr/oracle.hpp"
#include "freearr/replay.hpp"
#include "freearr/rootsys.hpp"
#include "freearr/theorems.hpp"

namespace freearr {

namespace clidetail {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_unknown = 3;
constexpr int exit_unsupported = 4;
constexpr int exit_reject = 5;

// a name with a ':' is a family label, anything else is a file path
inline Arrangement load_input(const std::string& name) {
    if (name.find(':') != std::string::npos) return family_arrangement(name);
    std::ifstream f(name);
    if (!f) throw std::runtime_error("cannot open '" + name + "'");
    return parse_arrangement(f);
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> vals;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer list '" + text + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument("bad integer list '" + text + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw std::invalid_argument("empty integer list");
    return vals;
}

inline IntVec parse_normal(const std::string& text, size_t dim) {
    std::vector<int> vals = parse_int_list(text);
    if (vals.size() != dim)
        throw std::invalid_argument("normal '" + text + "' has " + std::to_string(vals.size()) +
                                    " entries, expected " + std::to_string(dim));
    IntVec v;
    for (int x : vals) v.emplace_back(x);
    return v;
}

inline std::vector<Hyperplane> parse_planes(const std::vector<std::string>& texts, size_t dim) {
    std::vector<Hyperplane> out;
    for (const auto& t : texts) out.push_back(Hyperplane{parse_normal(t, dim)});
    return out;
}

inline std::string exp_str(const std::vector<int>& exp) {
    std::string s = "(";
    for (size_t i = 0; i < exp.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exp[i]);
    }
    return s + ")";
}

inline std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Accepted: return "accepted";
        case CheckStatus::NotApplicable: return "not applicable";
        case CheckStatus::Condition1Failed: return "condition 1 failed";
        case CheckStatus::Condition2Failed: return "condition 2 failed";
        case CheckStatus::Condition3Failed: return "condition 3 failed";
        case CheckStatus::ShapeMismatch: return "shape mismatch";
        case CheckStatus::NotAFlat: return "not a flat";
    }
    return "unknown";
}

inline int report_check(const CheckResult& res, std::ostream& out) {
    if (res.ok()) {
        out << "ACCEPTED exp=" << exp_str(res.exponents) << "\n";
        if (!res.message.empty()) out << res.message << "\n";
        return exit_ok;
    }
    out << "REJECTED (" << status_name(res.status) << "): " << res.message << "\n";
    return exit_reject;
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out,
                       bool quiet) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
    if (!quiet) out << "wrote " << path << "\n";
}

inline int run_charpoly(const std::string& input, bool quiet, std::ostream& out) {
    Arrangement a = load_input(input);
    IntersectionLattice lat = build_lattice(a);
    CharPoly cp = char_poly(lat);
    if (auto roots = chi_integer_roots(a)) {
        std::map<int, int> mult;
        for (int r : *roots) ++mult[r];
        std::string fac;
        for (const auto& [r, m] : mult) {
            fac += r == 0 ? std::string("t") : "(t-" + std::to_string(r) + ")";
            if (m > 1) fac += "^" + std::to_string(m);
        }
        out << "chi = " << fac << "\n";
        out << "chi expanded = " << cp.chi.str() << "\n";
    } else {
        out << "chi = " << cp.chi.str() << "\n";
        out << "chi does not split over the integers\n";
    }
    out << "pi = " << cp.poincare.str() << "\n";
    if (!quiet) {
        out << "mobius:\n";
        for (size_t i = 0; i < lat.flats().size(); ++i) {
            const Flat& f = lat.flat(i);
            out << "  codim " << f.codim << " planes [";
            bool first = true;
            for (size_t j = 0; j < a.size(); ++j)
                if (f.members >> j & 1) {
                    if (!first) out << ",";
                    out << j;
                    first = false;
                }
            out << "] mu = " << f.mobius << "\n";
        }
    }
    return exit_ok;
}

inline int run_solve(const std::string& input, int bound, bool quiet, std::ostream& out) {
    Arrangement a = load_input(input);
    FreenessReport rep = freeness_oracle(a, {}, bound);
    switch (rep.verdict) {
        case Freeness::FreeWithExponents: {
            out << "FREE exp=" << exp_str(rep.exponents) << "\n";
            if (!quiet)
                for (size_t i = 0; i < rep.basis.size(); ++i)
                    out << "  theta" << i + 1 << " = " << rep.basis[i].str() << "\n";
            return exit_ok;
        }
        case Freeness::NotFreeByFactorization:
            out << "NOT FREE: " << rep.detail << "\n";
            return exit_ok;
        case Freeness::Unknown:
            out << "UNKNOWN: " << rep.detail << "\n";
            return exit_unknown;
    }
    return exit_unknown;
}

inline int run_certify_catalan(const std::string& label, int k, const std::string& out_path,
                               bool quiet, std::ostream& out) {
    RootSystem rs = build_root_system(label);
    if (k < 1) throw UnsupportedFamily("level must be at least 1, got " + std::to_string(k));
    Certificate cert = catalan_certificate(rs, static_cast<size_t>(k));
    if (!quiet) {
        out << "seed " << cert.seed.family << ": " << cert.seed.hyperplanes.size()
            << " hyperplanes, exp=" << exp_str(cert.seed.exponents) << "\n";
        for (size_t s = 0; s < cert.steps.size(); ++s) {
            const CertificateStep& st = cert.steps[s];
            out << "stage " << s + 1 << ": added " << st.hyperplanes.size()
                << " hyperplanes of height " << s + 1;
            if (!st.evidence.restriction_cards.empty())
                out << ", count=" << st.evidence.card_before - st.evidence.restriction_cards[0];
            out << ", exp=" << exp_str(st.after) << "\n";
        }
    }
    write_text(out_path, certificate_to_string(cert), out, quiet);
    return exit_ok;
}

inline int run_replay(const std::string& source, const std::string& cert_path, std::ostream& out) {
    std::ifstream f(cert_path);
    if (!f) throw std::runtime_error("cannot open '" + cert_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    Certificate cert = certificate_from_string(buf.str());
    Arrangement target = load_input(source);
    ReplayReport rep = replay_certificate(build_lattice(target), cert);
    out << (rep.accepted ? "ACCEPTED: " : "REJECTED: ") << rep.message << "\n";
    return rep.accepted ? exit_ok : exit_reject;
}

inline int run_family(const std::string& label, const std::string& out_path, bool quiet,
                      std::ostream& out) {
    Arrangement a = family_arrangement(label);
    std::ostringstream text;
    write_arrangement(text, a);
    write_text(out_path, text.str(), out, quiet);
    return exit_ok;
}

}  // namespace clidetail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace clidetail;

    CLI::App app{"exact invariants and freeness certificates for central hyperplane arrangements"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress tables and progress chatter");

    std::string cp_input;
    auto* cp = app.add_subcommand("charpoly", "characteristic and Poincare polynomials");
    cp->add_option("input", cp_input, "arrangement file or family label")->required();

    std::string sv_input;
    int sv_bound = -1;
    auto* sv = app.add_subcommand("solve", "decide freeness and print a basis");
    sv->add_option("input", sv_input, "arrangement file or family label")->required();
    sv->add_option("--bound", sv_bound, "degree cap for the generator search");

    std::string cc_label, cc_out;
    int cc_k = 1;
    auto* cc = app.add_subcommand("certify-catalan",
                                  "staged freeness certificate for a deformation family");
    cc->add_option("label", cc_label, "root system label, e.g. A2")->required();
    cc->add_option("--k", cc_k, "deformation level");
    cc->add_option("--out", cc_out, "certificate output path");

    std::string rp_source, rp_cert;
    auto* rp = app.add_subcommand("replay", "re-verify a certificate against an arrangement");
    rp->add_option("source", rp_source, "arrangement file or family label")->required();
    rp->add_option("certificate", rp_cert, "certificate JSON path")->required();

    std::string fm_label, fm_out;
    auto* fm = app.add_subcommand("family", "write a named arrangement in text form");
    fm->add_option("label", fm_label, "family label, e.g. shi:A2:k=1")->required();
    fm->add_option("--out", fm_out, "arrangement output path");

    auto* ck = app.add_subcommand("check", "verify one inductive step");
    ck->require_subcommand(1);

    std::string ad_input, ad_plane;
    std::string ad_full, ad_deleted, ad_restriction;
    auto* ad = ck->add_subcommand("addition-deletion", "infer the third exponent tuple from two");
    ad->add_option("input", ad_input, "arrangement file or family label")->required();
    ad->add_option("--plane", ad_plane, "distinguished hyperplane, comma separated")->required();
    ad->add_option("--full", ad_full, "exponents of the whole arrangement");
    ad->add_option("--deleted", ad_deleted, "exponents after deleting the plane");
    ad->add_option("--restriction", ad_restriction, "exponents of the restriction");

    std::string m1_input, m1_exp;
    std::vector<std::string> m1_add;
    auto* m1 = ck->add_subcommand("mat", "add a family meeting in codimension |family|");
    m1->add_option("input", m1_input, "arrangement file or family label")->required();
    m1->add_option("--exp", m1_exp, "exponents of the input arrangement")->required();
    m1->add_option("--add", m1_add, "hyperplane to add, comma separated (repeatable)")
        ->required();

    std::string m2_input, m2_exp, m2_subset;
    std::vector<std::string> m2_add;
    auto* m2 = ck->add_subcommand("mat2", "add a family matched to the top exponent block");
    m2->add_option("input", m2_input, "arrangement file or family label")->required();
    m2->add_option("--exp", m2_exp, "exponents of the input arrangement")->required();
    m2->add_option("--add", m2_add, "hyperplane to add, comma separated (repeatable)")
        ->required();
    m2->add_option("--subset", m2_subset, "indices into the family, comma separated");

    std::string md_input, md_exp, md_subset;
    std::vector<std::string> md_del;
    auto* md = ck->add_subcommand("mdt", "delete a family matched to the low exponent block");
    md->add_option("input", md_input, "arrangement file or family label")->required();
    md->add_option("--exp", md_exp, "exponents of the input arrangement")->required();
    md->add_option("--delete", md_del, "hyperplane to delete, comma separated (repeatable)")
        ->required();
    md->add_option("--subset", md_subset, "indices into the family, comma separated");

    std::string mr_input, mr_exp;
    std::vector<std::string> mr_form;
    auto* mr = ck->add_subcommand("mrt", "count the restriction to a flat");
    mr->add_option("input", mr_input, "arrangement file or family label")->required();
    mr->add_option("--exp", mr_exp, "exponents of the input arrangement")->required();
    mr->add_option("--form", mr_form, "flat member normal, comma separated (repeatable)");

    std::vector<const char*> argv;
    argv.push_back("freearr");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_parse;
    }

    try {
        if (cp->parsed()) return run_charpoly(cp_input, quiet, out);
        if (sv->parsed()) return run_solve(sv_input, sv_bound, quiet, out);
        if (cc->parsed()) return run_certify_catalan(cc_label, cc_k, cc_out, quiet, out);
        if (rp->parsed()) return run_replay(rp_source, rp_cert, out);
        if (fm->parsed()) return run_family(fm_label, fm_out, quiet, out);

        if (ad->parsed()) {
            Arrangement a = load_input(ad_input);
            Hyperplane h{parse_normal(ad_plane, a.dim())};
            AdditionDeletionKnown known;
            if (!ad_full.empty()) known.exp_full = parse_int_list(ad_full);
            if (!ad_deleted.empty()) known.exp_deleted = parse_int_list(ad_deleted);
            if (!ad_restriction.empty()) known.exp_restriction = parse_int_list(ad_restriction);
            return report_check(check_addition_deletion(a, h, known), out);
        }
        if (m1->parsed()) {
            Arrangement a = load_input(m1_input);
            auto fam = parse_planes(m1_add, a.dim());
            return report_check(check_MAT(a, fam, parse_int_list(m1_exp)), out);
        }
        if (m2->parsed()) {
            Arrangement a = load_input(m2_input);
            auto fam = parse_planes(m2_add, a.dim());
            std::optional<std::vector<size_t>> subset;
            if (!m2_subset.empty()) {
                subset.emplace();
                for (int i : parse_int_list(m2_subset)) {
                    if (i < 0) throw std::invalid_argument("subset indices must be nonnegative");
                    subset->push_back(static_cast<size_t>(i));
                }
            }
            return report_check(check_MAT2(a, fam, parse_int_list(m2_exp), subset), out);
        }
        if (md->parsed()) {
            Arrangement a = load_input(md_input);
            auto fam = parse_planes(md_del, a.dim());
            std::optional<std::vector<size_t>> subset;
            if (!md_subset.empty()) {
                subset.emplace();
                for (int i : parse_int_list(md_subset)) {
                    if (i < 0) throw std::invalid_argument("subset indices must be nonnegative");
                    subset->push_back(static_cast<size_t>(i));
                }
            }
            return report_check(check_MDT(a, fam, parse_int_list(md_exp), subset), out);
        }
        if (mr->parsed()) {
            Arrangement a = load_input(mr_input);
            std::vector<IntVec> forms;
            for (const auto& t : mr_form) forms.push_back(parse_normal(t, a.dim()));
            Subspace x = Subspace::from_forms(forms, a.dim());
            return report_check(check_MRT_count(a, x, parse_int_list(mr_exp)), out);
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return exit_parse;
    } catch (const UnsupportedFamily& e) {
        err << e.what() << "\n";
        return exit_unsupported;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_parse;
    }
    err << "no subcommand\n";
    return exit_parse;
}

}  // namespace freearr
