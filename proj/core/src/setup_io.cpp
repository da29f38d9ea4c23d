#include "iq/setup_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace iq {

namespace {

using nlohmann::json;

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid integer '" + s + "'");
    }
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + s + "'");
    }
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(parse_int(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

// "deg f1 f2 ... | t1 t2 ..." with the bar section optional
std::pair<std::vector<Int>, std::vector<Int>> parse_deg_tokens(
    const std::vector<std::string>& toks, std::size_t from) {
    std::vector<Int> free_part, tors;
    bool after_bar = false;
    for (std::size_t i = from; i < toks.size(); ++i) {
        if (toks[i] == "|") {
            after_bar = true;
            continue;
        }
        (after_bar ? tors : free_part).push_back(parse_int(toks[i]));
    }
    return {free_part, tors};
}

std::string key_value(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected '" + key + "=...' got '" + tok + "'");
    return tok.substr(key.size() + 1);
}

Int json_to_int(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return parse_int(v.get<std::string>());
    throw ParseError("expected integer in JSON setup");
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

GroupElement element_from_json(const FgAbelianGroup& g, const json& v) {
    std::vector<Int> free_part, tors;
    for (const auto& e : v.value("free", json::array())) free_part.push_back(json_to_int(e));
    for (const auto& e : v.value("tors", json::array())) tors.push_back(json_to_int(e));
    if (tors.empty()) tors.resize(g.torsion.size());
    return make_element(g, std::move(free_part), std::move(tors));
}

json element_to_json(const GroupElement& x) {
    json free_part = json::array(), tors = json::array();
    for (const Int& e : x.free_part) free_part.push_back(int_to_json(e));
    for (const Int& e : x.tors) tors.push_back(int_to_json(e));
    return json{{"free", free_part}, {"tors", tors}};
}

SetupFile setup_from_json(const std::string& content) {
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    SetupFile f;
    if (!j.contains("group")) throw ParseError("JSON setup is missing 'group'");
    std::vector<Int> torsion;
    for (const auto& e : j["group"].value("torsion", json::array()))
        torsion.push_back(json_to_int(e));
    f.group = FgAbelianGroup(j["group"].value("rank", 0u), torsion);

    if (j.contains("raw")) {
        f.raw = true;
        const json& r = j["raw"];
        f.num_vars = r.value("num_vars", 0u);
        for (const auto& c : r.value("coefficients", json::array())) {
            if (!c.is_array() || c.size() != 3) throw ParseError("raw coefficient must be [i,j,a]");
            std::size_t i = c[0].get<std::size_t>(), k = c[1].get<std::size_t>();
            if (i < 1 || k < 1 || i > f.num_vars || k > f.num_vars)
                throw ParseError("raw coefficient index out of range");
            Rat a = c[2].is_string() ? parse_rat(c[2].get<std::string>())
                                     : Rat(json_to_int(c[2]));
            f.coefficients.emplace_back(std::min(i, k) - 1, std::max(i, k) - 1, a);
        }
        for (const auto& d : r.value("degrees", json::array()))
            f.raw_degrees.push_back(element_from_json(f.group, d));
        if (f.raw_degrees.size() != f.num_vars)
            throw ParseError("raw mode: degree count differs from num_vars");
        return f;
    }

    if (!j.contains("blocks")) throw ParseError("JSON setup is missing 'blocks'");
    f.q = j["blocks"].value("q", 0u);
    f.t = j["blocks"].value("t", 0u);
    f.m = j["blocks"].value("m", 0u);
    for (const auto& d : j.value("degrees", json::array()))
        f.degrees.push_back(element_from_json(f.group, d));
    if (f.degrees.size() != f.q + f.t + f.m)
        throw ParseError("degree count differs from q+t+m");
    if (j.contains("ample") && !j["ample"].is_null())
        f.ample = element_from_json(f.group, j["ample"]);
    return f;
}

}  // namespace

SetupFile parse_setup(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') return setup_from_json(content);

    SetupFile f;
    bool have_group = false, have_blocks = false, have_raw = false;
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> degs;
    std::istringstream is(content);
    std::string line;
    while (std::getline(is, line)) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& head = toks[0];
        if (head == "group") {
            if (toks.size() < 2) throw ParseError("group line needs rank=...");
            std::size_t rank = static_cast<std::size_t>(parse_int(key_value(toks[1], "rank")).get_ui());
            std::vector<Int> torsion;
            if (toks.size() >= 3) torsion = parse_int_list(key_value(toks[2], "torsion"));
            f.group = FgAbelianGroup(rank, torsion);
            have_group = true;
        } else if (head == "blocks") {
            if (toks.size() < 4) throw ParseError("blocks line needs q= t= m=");
            f.q = static_cast<std::size_t>(parse_int(key_value(toks[1], "q")).get_ui());
            f.t = static_cast<std::size_t>(parse_int(key_value(toks[2], "t")).get_ui());
            f.m = static_cast<std::size_t>(parse_int(key_value(toks[3], "m")).get_ui());
            have_blocks = true;
        } else if (head == "raw") {
            if (toks.size() < 2) throw ParseError("raw line needs vars=...");
            f.raw = true;
            f.num_vars = static_cast<std::size_t>(parse_int(key_value(toks[1], "vars")).get_ui());
            have_raw = true;
        } else if (head == "coef") {
            if (!have_raw) throw ParseError("coef line outside raw mode");
            if (toks.size() != 4) throw ParseError("coef line needs: coef i j a");
            std::size_t i = static_cast<std::size_t>(parse_int(toks[1]).get_ui());
            std::size_t j = static_cast<std::size_t>(parse_int(toks[2]).get_ui());
            if (i < 1 || j < 1 || i > f.num_vars || j > f.num_vars)
                throw ParseError("coef index out of range");
            f.coefficients.emplace_back(std::min(i, j) - 1, std::max(i, j) - 1, parse_rat(toks[3]));
        } else if (head == "deg") {
            degs.push_back(parse_deg_tokens(toks, 1));
        } else if (head == "ample") {
            auto [free_part, tors] = parse_deg_tokens(toks, 1);
            if (!have_group) throw ParseError("ample line before group line");
            f.ample = make_element(f.group, free_part, tors);
        } else {
            throw ParseError("unknown directive '" + head + "'");
        }
    }
    if (!have_group) throw ParseError("missing group line");
    if (!have_blocks && !have_raw) throw ParseError("missing blocks or raw line");
    if (have_blocks && have_raw) throw ParseError("blocks and raw are mutually exclusive");

    auto& target = f.raw ? f.raw_degrees : f.degrees;
    for (auto& [free_part, tors] : degs) {
        if (free_part.size() != f.group.rank)
            throw ParseError("degree has " + std::to_string(free_part.size()) +
                             " free coordinates, expected " + std::to_string(f.group.rank));
        target.push_back(make_element(f.group, free_part, tors));
    }
    std::size_t expected = f.raw ? f.num_vars : f.q + f.t + f.m;
    if (target.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " degree lines, found " +
                         std::to_string(target.size()));
    return f;
}

namespace {
void emit_element_line(std::ostringstream& os, const std::string& head, const GroupElement& x) {
    os << head;
    for (const Int& e : x.free_part) os << " " << e;
    if (!x.tors.empty()) {
        os << " |";
        for (const Int& e : x.tors) os << " " << e;
    }
    os << "\n";
}
}  // namespace

std::string emit_setup_text(const SetupFile& f) {
    std::ostringstream os;
    os << "group rank=" << f.group.rank << " torsion=";
    for (std::size_t j = 0; j < f.group.torsion.size(); ++j)
        os << (j ? "," : "") << f.group.torsion[j];
    os << "\n";
    if (f.raw) {
        os << "raw vars=" << f.num_vars << "\n";
        for (const auto& [i, j, a] : f.coefficients)
            os << "coef " << (i + 1) << " " << (j + 1) << " " << a << "\n";
        for (const auto& d : f.raw_degrees) emit_element_line(os, "deg", d);
        return os.str();
    }
    os << "blocks q=" << f.q << " t=" << f.t << " m=" << f.m << "\n";
    for (const auto& d : f.degrees) emit_element_line(os, "deg", d);
    if (f.ample) emit_element_line(os, "ample", *f.ample);
    return os.str();
}

std::string emit_setup_json(const SetupFile& f) {
    json j;
    j["format_version"] = 1;
    json torsion = json::array();
    for (const Int& k : f.group.torsion) torsion.push_back(int_to_json(k));
    j["group"] = {{"rank", f.group.rank}, {"torsion", torsion}};
    if (f.raw) {
        json coeffs = json::array();
        for (const auto& [i, k, a] : f.coefficients) {
            std::ostringstream os;
            os << a;
            coeffs.push_back(json::array({i + 1, k + 1, os.str()}));
        }
        json degs = json::array();
        for (const auto& d : f.raw_degrees) degs.push_back(element_to_json(d));
        j["raw"] = {{"num_vars", f.num_vars}, {"coefficients", coeffs}, {"degrees", degs}};
        return j.dump(2);
    }
    j["blocks"] = {{"q", f.q}, {"t", f.t}, {"m", f.m}};
    json degs = json::array();
    for (const auto& d : f.degrees) degs.push_back(element_to_json(d));
    j["degrees"] = degs;
    if (f.ample) j["ample"] = element_to_json(*f.ample);
    return j.dump(2);
}

SetupFile setup_file_for(const GradedSetup& s, const std::optional<GroupElement>& ample) {
    SetupFile f;
    f.group = s.group();
    f.q = s.q();
    f.t = s.t();
    f.m = s.m();
    f.degrees = s.degrees();
    f.ample = ample;
    return f;
}

namespace {

std::string render_rays(const std::vector<std::vector<Int>>& rays) {
    std::ostringstream os;
    if (rays.empty()) {
        os << "(zero cone)";
        return os.str();
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        os << (i ? " " : "") << "(";
        for (std::size_t j = 0; j < rays[i].size(); ++j) os << (j ? "," : "") << rays[i][j];
        os << ")";
    }
    return os.str();
}

AnalysisRecord::Body build_body(const QuadricVariety& x) {
    AnalysisRecord::Body b;
    b.ample = x.ample_class();
    b.dimension = x.dimension();
    b.picard_number = x.picard_number();
    b.picard_full = x.picard_group().is_full();
    b.picard_index = x.picard_group().index_in_ambient();
    b.eff_rays = x.eff_cone().generators();
    b.mov_rays = x.mov_cone().generators();
    b.sample_rays = x.semiample_cone().generators();
    for (const Face& f : x.cov_orbit_representatives())
        b.cov_reps.push_back(to_string(f, x.total_vars()));
    b.cov_size = x.covering_collection().size();
    b.quasismooth = x.is_quasismooth();
    b.locally_factorial = x.is_locally_factorial();
    b.smooth = x.is_smooth();
    b.q_factorial = x.is_q_factorial();
    FanoStatus fs = x.fano_status();
    b.anticanonical = fs.anticanonical;
    b.fano_tag = fs.tag;
    b.fano_index = fs.fano_index;
    b.fano_index_torsion_caveat = fs.index_torsion_caveat;
    b.ample_formula_degenerate = x.ample_formula_degenerate(fs.anticanonical);
    if (fs.fano_index) {
        auto mc = x.mukai_check();
        b.mukai_lhs = mc.lhs;
        b.mukai_rhs = mc.rhs;
        b.mukai_holds = mc.holds;
    }
    try {
        b.bpf_saturated = x.bpf_saturated();
    } catch (const UnsupportedTorsionError& e) {
        b.bpf_note = e.what();
    } catch (const SearchBoundExceededError& e) {
        b.bpf_note = e.what();
    }

    std::vector<std::vector<Int>> classes;
    auto add_rays = [&](const RationalCone& c) {
        for (const auto& r : c.rays())
            if (std::find(classes.begin(), classes.end(), r) == classes.end())
                classes.push_back(r);
    };
    add_rays(x.eff_cone());
    add_rays(x.mov_cone());
    add_rays(x.semiample_cone());
    std::sort(classes.begin(), classes.end());
    for (const auto& cls : classes) {
        GroupElement w = make_element(x.group(), cls);
        auto res = x.classify_contraction(w);
        AnalysisRecord::BoundaryClass bc;
        bc.cls = cls;
        bc.tag = res.tag;
        bc.lambda_rays = res.lambda.generators();
        b.contractions.push_back(std::move(bc));
    }
    return b;
}

}  // namespace

AnalysisRecord analyze_setup(const SetupFile& f) {
    AnalysisRecord rec;
    rec.group = f.group;
    std::optional<GradedSetup> setup;
    std::optional<GroupElement> ample = f.ample;

    if (f.raw) {
        rec.raw_input = true;
        QuadraticForm qf;
        qf.group = f.group;
        qf.num_vars = f.num_vars;
        qf.degrees = f.raw_degrees;
        for (const auto& [i, j, a] : f.coefficients) qf.set_coefficient(i, j, a);
        NormalFormResult nf = normalize_quadric(qf);  // NotHomogeneous/ZeroForm propagate
        rec.normal_form = nf;
        rec.q = nf.q;
        rec.t = nf.t;
        rec.m = f.num_vars - nf.q - nf.t;
        try {
            setup = GradedSetup(f.group, nf.block_degrees, nf.q, nf.t, rec.m);
        } catch (const GradingStructureError& e) {
            rec.construction_error = e.what();
            return rec;
        }
    } else {
        rec.q = f.q;
        rec.t = f.t;
        rec.m = f.m;
        setup = GradedSetup(f.group, f.degrees, f.q, f.t, f.m);  // structural errors propagate
    }

    rec.validation = validate(*setup);
    if (!rec.validation.valid()) return rec;
    try {
        QuadricVariety x(*setup, ample);
        rec.body = build_body(x);
    } catch (const AmpleClassError& e) {
        rec.construction_error = e.what();
    }
    return rec;
}

std::string render_analysis_text(const AnalysisRecord& r) {
    std::ostringstream os;
    if (r.raw_input && r.normal_form) {
        os << "normal form: q=" << r.normal_form->q << " t=" << r.normal_form->t
           << " sing_dim=" << r.normal_form->sing_dim << "\n";
        os << "variable order:";
        for (std::size_t i : r.normal_form->variable_permutation) os << " T" << (i + 1);
        os << "\n";
        for (const auto& step : r.normal_form->rational_reduction) os << "  step: " << step << "\n";
    }
    os << "blocks: q=" << r.q << " t=" << r.t << " m=" << r.m << "\n";
    os << "group: rank=" << r.group.rank << " torsion=[";
    for (std::size_t j = 0; j < r.group.torsion.size(); ++j)
        os << (j ? "," : "") << r.group.torsion[j];
    os << "]\n";
    os << "validation: pointed=" << (r.validation.pointed ? "yes" : "no")
       << " almost_free=" << (r.validation.almost_free ? "yes" : "no")
       << " moving_fulldim=" << (r.validation.moving_cone_fulldim ? "yes" : "no")
       << " factorial=" << (r.validation.factorial ? "yes" : "no") << " ("
       << r.validation.factorial_case << ")\n";
    for (const auto& m : r.validation.messages) os << "  ! " << m << "\n";
    if (!r.construction_error.empty()) os << "error: " << r.construction_error << "\n";
    if (!r.body) return os.str();

    const auto& b = *r.body;
    os << "ample class: " << to_string(b.ample) << "\n";
    os << "dimension: " << b.dimension << "\n";
    os << "picard: number=" << b.picard_number << " full=" << (b.picard_full ? "yes" : "no");
    if (!b.picard_full) {
        os << " index=";
        if (b.picard_index == 0)
            os << "infinite";
        else
            os << b.picard_index;
    }
    os << "\n";
    os << "Eff rays: " << render_rays(b.eff_rays) << "\n";
    os << "Mov rays: " << render_rays(b.mov_rays) << "\n";
    os << "SAmple rays: " << render_rays(b.sample_rays) << "\n";
    os << "cov(X): " << b.cov_size << " faces, orbit representatives:";
    for (const auto& f : b.cov_reps) os << " " << f;
    os << "\n";
    os << "quasismooth=" << (b.quasismooth ? "yes" : "no")
       << " locally_factorial=" << (b.locally_factorial ? "yes" : "no")
       << " smooth=" << (b.smooth ? "yes" : "no")
       << " q_factorial=" << (b.q_factorial ? "yes" : "no") << "\n";
    os << "anticanonical: " << to_string(b.anticanonical) << "\n";
    os << "fano: " << to_string(b.fano_tag);
    if (b.fano_index) {
        os << " index=" << *b.fano_index;
        if (b.fano_index_torsion_caveat) os << " (torsion caveat)";
    }
    os << "\n";
    if (b.ample_formula_degenerate)
        os << "note: intersection-of-interiors differs from relint(SAmple) at -K\n";
    if (b.mukai_holds)
        os << "mukai: " << *b.mukai_lhs << " <= " << *b.mukai_rhs << " "
           << (*b.mukai_holds ? "holds" : "FAILS") << "\n";
    if (b.bpf_saturated)
        os << "bpf: saturated=" << (*b.bpf_saturated ? "yes" : "no") << "\n";
    else if (!b.bpf_note.empty())
        os << "bpf: unavailable (" << b.bpf_note << ")\n";
    for (const auto& c : b.contractions) {
        os << "contraction (";
        for (std::size_t j = 0; j < c.cls.size(); ++j) os << (j ? "," : "") << c.cls[j];
        os << "): " << to_string(c.tag) << ", chamber " << render_rays(c.lambda_rays) << "\n";
    }
    return os.str();
}

std::string render_analysis_json(const AnalysisRecord& r) {
    json j;
    j["format_version"] = 1;
    if (r.raw_input && r.normal_form) {
        json steps = json::array();
        for (const auto& s : r.normal_form->rational_reduction) steps.push_back(s);
        json perm = json::array();
        for (std::size_t i : r.normal_form->variable_permutation) perm.push_back(i + 1);
        j["normal_form"] = {{"q", r.normal_form->q},
                            {"t", r.normal_form->t},
                            {"sing_dim", r.normal_form->sing_dim},
                            {"variable_order", perm},
                            {"reduction", steps}};
    }
    j["blocks"] = {{"q", r.q}, {"t", r.t}, {"m", r.m}};
    json torsion = json::array();
    for (const Int& k : r.group.torsion) torsion.push_back(int_to_json(k));
    j["group"] = {{"rank", r.group.rank}, {"torsion", torsion}};
    j["validation"] = {{"pointed", r.validation.pointed},
                       {"almost_free", r.validation.almost_free},
                       {"moving_cone_fulldim", r.validation.moving_cone_fulldim},
                       {"factorial", r.validation.factorial},
                       {"factorial_case", r.validation.factorial_case},
                       {"messages", r.validation.messages}};
    if (!r.construction_error.empty()) j["error"] = r.construction_error;
    if (!r.body) return j.dump(2);

    const auto& b = *r.body;
    auto rays_json = [](const std::vector<std::vector<Int>>& rays) {
        json out = json::array();
        for (const auto& r2 : rays) {
            json v = json::array();
            for (const Int& e : r2) v.push_back(int_to_json(e));
            out.push_back(v);
        }
        return out;
    };
    j["ample"] = element_to_json(b.ample);
    j["dimension"] = b.dimension;
    j["picard"] = {{"number", b.picard_number},
                   {"full", b.picard_full},
                   {"index", int_to_json(b.picard_index)}};
    j["cones"] = {{"eff", rays_json(b.eff_rays)},
                  {"mov", rays_json(b.mov_rays)},
                  {"semiample", rays_json(b.sample_rays)}};
    j["cov"] = {{"size", b.cov_size}, {"orbit_representatives", b.cov_reps}};
    j["flags"] = {{"quasismooth", b.quasismooth},
                  {"locally_factorial", b.locally_factorial},
                  {"smooth", b.smooth},
                  {"q_factorial", b.q_factorial}};
    j["anticanonical"] = element_to_json(b.anticanonical);
    j["fano"] = {{"status", to_string(b.fano_tag)}};
    if (b.fano_index) {
        j["fano"]["index"] = int_to_json(*b.fano_index);
        j["fano"]["index_torsion_caveat"] = b.fano_index_torsion_caveat;
    }
    j["ample_formula_degenerate"] = b.ample_formula_degenerate;
    if (b.mukai_holds)
        j["mukai"] = {{"lhs", int_to_json(*b.mukai_lhs)},
                      {"rhs", int_to_json(*b.mukai_rhs)},
                      {"holds", *b.mukai_holds}};
    if (b.bpf_saturated)
        j["bpf"] = {{"saturated", *b.bpf_saturated}};
    else if (!b.bpf_note.empty())
        j["bpf"] = {{"note", b.bpf_note}};
    json contractions = json::array();
    for (const auto& c : b.contractions) {
        json cls = json::array();
        for (const Int& e : c.cls) cls.push_back(int_to_json(e));
        contractions.push_back(
            {{"class", cls}, {"type", to_string(c.tag)}, {"chamber", rays_json(c.lambda_rays)}});
    }
    j["contractions"] = contractions;
    return j.dump(2);
}

}  // namespace iq
