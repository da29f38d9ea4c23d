#include <CLI11.hpp>

#include "iq/classify.hpp"
#include "iq/setup_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw iq::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_analyze(const std::string& path, bool as_json) {
    iq::SetupFile f = iq::parse_setup(read_file(path));
    iq::AnalysisRecord rec = iq::analyze_setup(f);
    std::cout << (as_json ? iq::render_analysis_json(rec) : iq::render_analysis_text(rec));
    if (!as_json) std::cout.flush();
    if (!rec.ok()) {
        if (rec.construction_error.empty() && !rec.validation.valid())
            std::cerr << "validation failed:";
        for (const auto& m : rec.validation.messages) std::cerr << " " << m << ";";
        if (!rec.validation.valid() || !rec.construction_error.empty()) std::cerr << "\n";
        return 2;
    }
    return 0;
}

int run_normal_form(const std::string& path) {
    iq::SetupFile f = iq::parse_setup(read_file(path));
    iq::QuadraticForm qf;
    qf.group = f.group;
    if (f.raw) {
        qf.num_vars = f.num_vars;
        qf.degrees = f.raw_degrees;
        for (const auto& [i, j, a] : f.coefficients) qf.set_coefficient(i, j, a);
    } else {
        // rebuild g_{q,t} from the block data and renormalize
        iq::GradedSetup s(f.group, f.degrees, f.q, f.t, f.m);
        qf.num_vars = s.total_vars();
        qf.degrees = s.degrees();
        for (std::size_t p = 0; 2 * p + 1 < s.q(); ++p)
            qf.set_coefficient(2 * p, 2 * p + 1, 1);
        for (std::size_t k = 0; k < s.t(); ++k) qf.set_coefficient(s.q() + k, s.q() + k, 1);
    }
    iq::NormalFormResult nf = iq::normalize_quadric(qf);
    std::cout << "q=" << nf.q << " t=" << nf.t << " sing_dim=" << nf.sing_dim << "\n";
    std::cout << "variable order:";
    for (std::size_t i : nf.variable_permutation) std::cout << " T" << (i + 1);
    std::cout << "\n";
    for (const auto& step : nf.rational_reduction) std::cout << "step: " << step << "\n";
    return 0;
}

void emit_item(const std::string& label, const iq::GradedSetup& setup,
               const iq::GroupElement& ample, const std::string& out_dir, std::size_t index) {
    iq::SetupFile sf = iq::setup_file_for(setup, ample);
    std::string text = "# " + label + "\n" + iq::emit_setup_text(sf);
    if (out_dir.empty()) {
        std::cout << text << "\n";
    } else {
        std::filesystem::create_directories(out_dir);
        char name[32];
        std::snprintf(name, sizeof(name), "item_%04zu.iq", index);
        std::ofstream out(std::filesystem::path(out_dir) / name);
        out << text;
        std::cout << name << ": " << label << "\n";
    }
}

int run_classify(int picard, std::size_t dim, long alpha_max, bool full, std::size_t n_max,
                 long a_max, bool fano, bool almost_fano, const std::string& out_dir) {
    std::size_t count = 0;
    if (picard == 1) {
        for (const auto& item : iq::enumerate_picard1(dim)) {
            std::ostringstream label;
            label << "picard=1 n=" << item.n << " m=" << item.m
                  << (item.variety.is_smooth() ? " smooth" : " singular");
            emit_item(label.str(), item.variety.setup(), item.variety.ample_class(), out_dir,
                      ++count);
        }
    } else if (picard == 2) {
        iq::FanoFilter filter = fano ? iq::FanoFilter::FanoOnly
                                     : almost_fano ? iq::FanoFilter::AlmostFano
                                                   : iq::FanoFilter::All;
        for (const auto& item : iq::enumerate_picard2(dim, alpha_max, filter))
            emit_item(item.constellation.label(), item.variety.setup(),
                      item.variety.ample_class(), out_dir, ++count);
    } else if (picard == 3) {
        if (!full) throw iq::Error("--picard 3 requires --full");
        for (const auto& item : iq::enumerate_full_picard3(n_max, a_max))
            emit_item(item.constellation.label(), item.variety.setup(),
                      item.variety.ample_class(), out_dir, ++count);
    } else {
        throw iq::Error("--picard must be 1, 2 or 3");
    }
    std::cout << "count=" << count << "\n";
    return 0;
}

int run_chamber(const std::string& path, const std::string& cls) {
    iq::SetupFile f = iq::parse_setup(read_file(path));
    iq::AnalysisRecord rec = iq::analyze_setup(f);
    if (!rec.ok()) {
        std::cerr << "setup is not a valid quadric variety\n";
        return 2;
    }
    iq::GradedSetup setup = f.raw
                                ? iq::GradedSetup(f.group, rec.normal_form->block_degrees,
                                                  rec.normal_form->q, rec.normal_form->t, rec.m)
                                : iq::GradedSetup(f.group, f.degrees, f.q, f.t, f.m);
    iq::QuadricVariety x(setup, f.ample);
    std::vector<iq::Int> coords;
    std::string cur;
    for (char ch : cls + ",") {
        if (ch == ',') {
            if (!cur.empty()) coords.push_back(iq::Int(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    iq::GroupElement w = iq::make_element(x.group(), coords);
    auto res = x.classify_contraction(w);
    std::cout << "chamber:";
    for (const auto& r : res.lambda.generators()) {
        std::cout << " (";
        for (std::size_t j = 0; j < r.size(); ++j) std::cout << (j ? "," : "") << r[j];
        std::cout << ")";
    }
    std::cout << "\ncontraction: " << iq::to_string(res.tag) << "\n";
    return 0;
}

int run_fujita(const std::string& path) {
    iq::SetupFile f = iq::parse_setup(read_file(path));
    iq::AnalysisRecord rec = iq::analyze_setup(f);
    if (!rec.ok()) {
        std::cerr << "setup is not a valid quadric variety\n";
        return 2;
    }
    iq::GradedSetup setup = f.raw
                                ? iq::GradedSetup(f.group, rec.normal_form->block_degrees,
                                                  rec.normal_form->q, rec.normal_form->t, rec.m)
                                : iq::GradedSetup(f.group, f.degrees, f.q, f.t, f.m);
    iq::QuadricVariety x(setup, f.ample);
    bool all_saturated = true;
    for (const iq::Face& face : x.cov_orbit_representatives()) {
        bool sat = x.face_monoid_saturated(face);
        all_saturated = all_saturated && sat;
        std::cout << "face " << iq::to_string(face, x.total_vars()) << ": generators";
        for (const auto& g : x.bpf_generators(face)) std::cout << " " << iq::to_string(g);
        std::cout << " -> " << (sat ? "saturated" : "NOT saturated") << "\n";
    }
    std::cout << "bpf_saturated=" << (all_saturated ? "true" : "false") << "\n";
    if (all_saturated) std::cout << "every nef class is base point free\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intrinsic quadric calculator"};
    app.require_subcommand(1);

    std::string path, out_dir, cls;
    bool as_json = false, full = false, fano = false, almost_fano = false;
    int picard = 0;
    std::size_t dim = 0, n_max = 8;
    long alpha_max = 0, a_max = 0;

    auto* analyze = app.add_subcommand("analyze", "full invariant report for a setup file");
    analyze->add_option("file", path)->required();
    analyze->add_flag("--json", as_json, "emit a JSON report");

    auto* nf = app.add_subcommand("normal-form", "graded quadratic normal form of a setup");
    nf->add_option("file", path)->required();

    auto* cl = app.add_subcommand("classify", "enumerate classification lists");
    cl->add_option("--picard", picard, "Picard number (1, 2 or 3)")->required();
    cl->add_option("--dim", dim, "variety dimension (picard 1 and 2)");
    cl->add_option("--alpha-max", alpha_max, "parameter bound for picard 2");
    cl->add_flag("--full", full, "full case (picard 3)");
    cl->add_option("--n-max", n_max, "variable bound for picard 3");
    cl->add_option("--a-max", a_max, "parameter bound for picard 3");
    cl->add_flag("--fano", fano, "only Fano items");
    cl->add_flag("--almost-fano", almost_fano, "only almost Fano items (nef -K)");
    cl->add_option("--out", out_dir, "write one file per item into this directory");

    auto* ch = app.add_subcommand("chamber", "GIT chamber and contraction type of a class");
    ch->add_option("file", path)->required();
    ch->add_option("--class", cls, "comma-separated class coordinates")->required();

    auto* fu = app.add_subcommand("fujita", "base-point-free monoid saturation report");
    fu->add_option("file", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(path, as_json);
        if (app.got_subcommand(nf)) return run_normal_form(path);
        if (app.got_subcommand(cl)) {
            if (fano && almost_fano) throw iq::Error("--fano and --almost-fano conflict");
            return run_classify(picard, dim, alpha_max, full, n_max, a_max, fano, almost_fano,
                                out_dir);
        }
        if (app.got_subcommand(ch)) return run_chamber(path, cls);
        if (app.got_subcommand(fu)) return run_fujita(path);
    } catch (const iq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::NotHomogeneousError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::ZeroFormError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::GradingStructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::InvalidGradingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::AmpleClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::WNotEffectiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::UnsupportedTorsionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::FaceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const iq::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
