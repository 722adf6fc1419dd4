#include "polyball/report.hpp"

#include <algorithm>
#include <sstream>

namespace polyball {

using nlohmann::json;

namespace {

json ratvec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json one_based(const std::vector<int>& idx) {
    json a = json::array();
    for (int i : idx) a.push_back(i + 1);
    return a;
}

std::string members_text(const std::vector<int>& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members[i] + 1);
    }
    return s + "}";
}

}  // namespace

void TextTable::row(std::vector<std::string> cells) {
    rows_.push_back(std::move(cells));
}

std::string TextTable::str(int indent) const {
    std::vector<std::size_t> widths;
    for (const auto& r : rows_) {
        if (widths.size() < r.size()) widths.resize(r.size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
    }
    std::ostringstream os;
    for (const auto& r : rows_) {
        os << std::string(static_cast<std::size_t>(indent), ' ');
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << r[i];
            if (i + 1 < r.size()) os << std::string(widths[i] - r[i].size() + 2, ' ');
        }
        os << '\n';
    }
    return os.str();
}

json star_report_json(const StarReport& r) {
    json j;
    j["m"] = r.m;
    j["num_components"] = r.num_components;
    json classes = json::array();
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        json c;
        c["representative"] = ratvec_json(r.classes[k].representative);
        c["members"] = one_based(r.classes[k].members);
        c["verdict"] = verdict_name(r.verdicts[k]);
        if (r.certificates[k]) {
            json cert;
            cert["beta"] = ratvec_json(r.certificates[k]->beta);
            cert["margin"] = r.certificates[k]->margin.str();
            c["certificate"] = cert;
        }
        classes.push_back(c);
    }
    j["classes"] = classes;
    j["strict_count"] = r.strict_count;
    j["weak_count"] = r.weak_count;
    json weak_only = json::array();
    for (int k : r.weak_only_indices()) weak_only.push_back(ratvec_json(r.classes[static_cast<std::size_t>(k)].representative));
    j["weak_only"] = weak_only;
    if (!r.weak_only_indices().empty())
        j["note"] = "weak and strict verdicts differ for " + std::to_string(r.weak_only_indices().size()) +
                    " class(es); both are reported independently";
    return j;
}

std::string star_report_text(const StarReport& r) {
    std::ostringstream os;
    os << "m: " << r.m << "\ncomponents: " << r.num_components << "\n";
    TextTable t;
    t.row({"class", "representative", "members", "verdict", "margin", "beta"});
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        std::vector<std::string> cells;
        cells.push_back(std::to_string(k + 1));
        cells.push_back(to_string(r.classes[k].representative));
        cells.push_back(members_text(r.classes[k].members));
        cells.push_back(verdict_name(r.verdicts[k]));
        if (r.certificates[k]) {
            cells.push_back(r.certificates[k]->margin.str());
            cells.push_back(to_string(r.certificates[k]->beta));
        } else {
            cells.push_back("-");
            cells.push_back("-");
        }
        t.row(std::move(cells));
    }
    os << t.str();
    os << "strict_count: " << r.strict_count << "\nweak_count: " << r.weak_count << "\n";
    const auto weak_only = r.weak_only_indices();
    if (!weak_only.empty()) {
        os << "note: weak and strict verdicts differ for " << weak_only.size()
           << " class(es); both are reported independently\n";
    }
    return os.str();
}

json facet_report_json(const BallPolytope& p, const FacetReport& f) {
    json j;
    j["facet_count"] = f.facet_count;
    json classes = json::array();
    for (const auto& e : f.entries) {
        json c;
        c["representative"] = ratvec_json(p.classes[static_cast<std::size_t>(e.class_index)].representative);
        c["members"] = one_based(p.classes[static_cast<std::size_t>(e.class_index)].members);
        c["facet"] = e.facet;
        c["relaxed_optimum"] = e.relaxed_value.str();
        classes.push_back(c);
    }
    j["classes"] = classes;
    return j;
}

std::string facet_report_text(const BallPolytope& p, const FacetReport& f) {
    std::ostringstream os;
    os << "facet_count: " << f.facet_count << "\n";
    TextTable t;
    t.row({"class", "representative", "members", "facet", "relaxed_optimum"});
    for (const auto& e : f.entries) {
        t.row({std::to_string(e.class_index + 1),
               to_string(p.classes[static_cast<std::size_t>(e.class_index)].representative),
               members_text(p.classes[static_cast<std::size_t>(e.class_index)].members),
               e.facet ? "yes" : "no", e.relaxed_value.str()});
    }
    os << t.str();
    return os.str();
}

json face_descriptor_json(const FaceDescriptor& fd) {
    json j;
    j["tight_set"] = one_based(fd.tight_coords);
    json signs = json::array();
    for (int s : fd.tight_signs) signs.push_back(s);
    j["signs"] = signs;
    j["dim"] = fd.dim_estimate;
    return j;
}

json vertex_list_json(const BallPolytope& p, const VertexList& v) {
    (void)p;
    json j;
    j["vertex_count"] = v.size();
    json verts = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        json e;
        e["beta"] = ratvec_json(v.vertices[i]);
        e["face"] = face_descriptor_json(v.faces[i]);
        verts.push_back(e);
    }
    j["vertices"] = verts;
    return j;
}

std::string vertex_list_text(const BallPolytope& p, const VertexList& v) {
    (void)p;
    std::ostringstream os;
    os << "vertex_count: " << v.size() << "\n";
    TextTable t;
    t.row({"vertex", "beta", "tight_set", "signs"});
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string signs;
        for (std::size_t k = 0; k < v.faces[i].tight_signs.size(); ++k) {
            if (k) signs += ",";
            signs += v.faces[i].tight_signs[k] > 0 ? "+" : "-";
        }
        t.row({std::to_string(i + 1), to_string(v.vertices[i]), members_text(v.faces[i].tight_coords),
               "(" + signs + ")"});
    }
    os << t.str();
    return os.str();
}

json embedding_json(const EmbeddingMap& m, const SpaceVerdict& v, std::optional<int> s) {
    json j;
    j["m"] = v.m;
    j["n"] = v.n;
    j["r"] = v.strict_count;
    j["weak_count"] = v.weak_count;
    j["facet_count"] = v.facet_count;
    j["iso_to_linf_m"] = v.iso_to_linf_m;
    j["embeddable_min_s"] = v.embeddable_min_s;
    json reps = json::array();
    for (const auto& c : m.strict_reps) reps.push_back(ratvec_json(c));
    j["strict_representatives"] = reps;
    json rows = json::array();
    for (const auto& row : m.image_rows) rows.push_back(ratvec_json(row));
    j["image_basis"] = rows;
    j["isometry_verified"] = true;  // construction throws otherwise
    if (s) {
        j["s"] = *s;
        j["embeddable_into_s"] = (v.embeddable_min_s <= *s);
    }
    return j;
}

std::string embedding_text(const EmbeddingMap& m, const SpaceVerdict& v, std::optional<int> s) {
    std::ostringstream os;
    os << "m: " << v.m << "\nn: " << v.n << "\nr: " << v.strict_count << "\nweak_count: " << v.weak_count
       << "\nfacet_count: " << v.facet_count << "\n";
    os << "iso_to_linf_m: " << (v.iso_to_linf_m ? "yes" : "no") << "\n";
    os << "embeddable_min_s: " << v.embeddable_min_s << "\n";
    if (s) os << "embeddable_into_s (s=" << *s << "): " << (v.embeddable_min_s <= *s ? "yes" : "no") << "\n";
    os << "strict_representatives:\n";
    TextTable reps;
    for (const auto& c : m.strict_reps) reps.row({to_string(c)});
    os << reps.str();
    os << "image_basis (rows):\n";
    TextTable rows;
    for (const auto& row : m.image_rows) rows.row({to_string(row)});
    os << rows.str();
    os << "isometry_verified: yes\n";
    return os.str();
}

json opspace_json(const OpSpaceReport& r) {
    json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["r"] = r.r;
    j["strict_count_q"] = r.strict_count_q;
    json rows = json::array();
    for (const auto& row : r.w_basis_rows) rows.push_back(ratvec_json(row));
    j["w_basis"] = rows;
    j["ext_w"] = r.w_vertices.size();
    json verts = json::array();
    for (const auto& v : r.w_vertices.vertices) verts.push_back(ratvec_json(v));
    j["w_vertices"] = verts;
    j["facet_count"] = r.facet_count;
    j["facet_formula"] = r.facet_formula;
    j["extreme_contractions"] = r.extreme_contractions.get_str();
    j["extreme_formula"] = r.extreme_formula;
    j["cross_checked"] = r.cross_checked;
    j["note"] = "counts are invariant under invertible linear images of the unit ball; "
                "irrational metric shapes are represented by rational affine models";
    return j;
}

std::string opspace_text(const OpSpaceReport& r) {
    std::ostringstream os;
    os << "m: " << r.m << "\nn: " << r.n << "\nr (extreme pairs): " << r.r << "\n";
    os << "w_basis (rows):\n";
    TextTable rows;
    for (const auto& row : r.w_basis_rows) rows.row({to_string(row)});
    os << rows.str();
    os << "strict_count_q: " << r.strict_count_q << "\n";
    os << "ext_w: " << r.w_vertices.size() << "\n";
    os << "extreme_contractions: " << r.extreme_contractions.get_str() << ", facets: " << r.facet_count << "\n";
    os << "formulas: extreme_contractions = " << r.extreme_formula << ", facets = " << r.facet_formula << "\n";
    os << "cross_checked: " << (r.cross_checked ? "yes" : "no") << "\n";
    os << "note: counts are invariant under invertible linear images of the unit ball; "
          "irrational metric shapes are represented by rational affine models\n";
    return os.str();
}

json checks_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

std::string checks_text(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    return os.str();
}

std::string dump_report(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace polyball
