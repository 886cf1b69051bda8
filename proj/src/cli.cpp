#include "normcalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "normcalc/verifier.hpp"

namespace normcalc {

using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- overrides

class OverrideParser {
public:
    OverrideParser(const std::string& text, const std::string& filename)
        : text_(text), file_(filename) {}

    ScenarioOverrides parse() {
        ScenarioOverrides out;
        std::istringstream in(text_);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            parse_line(out, line, lineno);
        }
        return out;
    }

private:
    [[noreturn]] void fail(int lineno, std::size_t col, const std::string& msg) const {
        throw input_error(file_ + ":" + std::to_string(lineno) + ":" + std::to_string(col + 1) + ": " + msg);
    }

    void parse_line(ScenarioOverrides& out, const std::string& line, int lineno) {
        const std::size_t key_start = line.find_first_not_of(" \t");
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, line.size(), "expected '=' after key");
        std::size_t key_end = eq;
        while (key_end > key_start && std::isspace(static_cast<unsigned char>(line[key_end - 1]))) --key_end;
        const std::string key = line.substr(key_start, key_end - key_start);
        for (char c : key)
            if (!(std::islower(static_cast<unsigned char>(c)) || c == '_'))
                fail(lineno, key_start, "malformed key '" + key + "'");

        if (key == "beta_image") {
            if (out.beta_image) fail(lineno, key_start, "duplicate key 'beta_image'");
            out.beta_image = parse_int_list(line, eq + 1, lineno);
        } else if (key == "gamma_kernel") {
            if (out.gamma_kernel) fail(lineno, key_start, "duplicate key 'gamma_kernel'");
            out.gamma_kernel = parse_vec_list(line, eq + 1, lineno);
        } else if (key == "relations") {
            if (out.relations) fail(lineno, key_start, "duplicate key 'relations'");
            out.relations = parse_vec_list(line, eq + 1, lineno);
        } else {
            fail(lineno, key_start, "unknown key '" + key + "' (expected beta_image, gamma_kernel or relations)");
        }
    }

    Vec parse_int_list(const std::string& line, std::size_t pos, int lineno) const {
        Vec out;
        for (;;) {
            out.push_back(parse_int(line, pos, lineno));
            skip_ws(line, pos);
            if (pos >= line.size()) return out;
            if (line[pos] != ',') fail(lineno, pos, "expected ',' or end of line");
            ++pos;
        }
    }

    std::vector<Vec> parse_vec_list(const std::string& line, std::size_t pos, int lineno) const {
        std::vector<Vec> out;
        Vec cur;
        for (;;) {
            cur.push_back(parse_int(line, pos, lineno));
            skip_ws(line, pos);
            if (pos >= line.size()) {
                out.push_back(std::move(cur));
                return out;
            }
            if (line[pos] == ',') {
                ++pos;
            } else if (line[pos] == ';') {
                out.push_back(std::move(cur));
                cur.clear();
                ++pos;
            } else {
                fail(lineno, pos, "expected ',', ';' or end of line");
            }
        }
    }

    static void skip_ws(const std::string& line, std::size_t& pos) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }

    Int parse_int(const std::string& line, std::size_t& pos, int lineno) const {
        skip_ws(line, pos);
        const std::size_t start = pos;
        if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
        std::size_t digits = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) fail(lineno, start, "expected integer");
        try {
            return std::stoll(line.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail(lineno, start, "integer out of 64-bit range");
        }
    }

    const std::string& text_;
    const std::string& file_;
};

// ------------------------------------------------------------------- output

std::string disc_str(bool trivial) { return trivial ? "trivial" : "nontrivial"; }

bool parse_disc(const std::string& s) {
    if (s == "trivial") return true;
    if (s == "nontrivial") return false;
    throw input_error("--disc must be 'trivial' or 'nontrivial'");
}

std::string subset_names(const Scenario& s, const Subset& x, bool coords) {
    if (x.is_coset()) return x.display();
    std::string out = "{";
    bool first = true;
    for (const auto& e : x.elements()) {
        if (!first) out += ", ";
        out += coords ? vec_display(e) : s.root_system().element_name(e);
        first = false;
    }
    return out + "}";
}

ordered_json subset_json(const Scenario& s, const Subset& x, bool coords) {
    ordered_json arr = ordered_json::array();
    if (x.is_coset()) {
        arr.push_back(x.display());
        return arr;
    }
    for (const auto& e : x.elements()) {
        if (coords) arr.push_back(e);
        else arr.push_back(s.root_system().element_name(e));
    }
    return arr;
}

ordered_json state_json(const Scenario& s, const FieldState& state) {
    ordered_json split = ordered_json::object();
    for (int g = 0; g < s.brauer().generator_count(); ++g)
        split[s.brauer().names()[static_cast<std::size_t>(g)]] =
            state.splitness.is_split(g) ? "split" : "nonsplit";
    ordered_json j;
    j["splitness"] = split;
    j["disc"] = disc_str(state.disc_trivial);
    j["distinguished"] = mask_vertices(state.distinguished, s.rank());
    return j;
}

ordered_json report_json(const Report& rep) {
    ordered_json j;
    j["corollary"] = rep.corollary;
    j["scenario"] = rep.scenario;
    j["p"] = rep.p;
    if (rep.rank > 0) j["rank"] = rep.rank;

    const Scenario s = Scenario::create(parse_scenario(rep.scenario), rep.rank);
    ordered_json states = ordered_json::array();
    for (const auto& st : rep.states) states.push_back(state_json(s, st));
    j["states"] = states;

    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json cj;
        cj["state"] = c.state;
        cj["phi"] = c.phi;
        cj["cond1"] = c.cond1;
        cj["cond2"] = c.cond2;
        cj["vacuous"] = c.vacuous;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["verdict"] = rep.verified ? "verified" : "refuted";
    ordered_json notes = ordered_json::array();
    for (const auto& n : rep.notes) notes.push_back(n);
    for (const auto& c : rep.counterexamples) notes.push_back("counterexample: " + c);
    j["notes"] = notes;
    return j;
}

void report_text(std::ostream& out, const Report& rep, bool verbose) {
    out << "corollary " << rep.corollary;
    if (rep.rank > 0) out << " (rank " << rep.rank << ")";
    out << ": scenario " << rep.scenario << ", p = " << rep.p << "\n";
    out << "  admissible states: " << rep.states.size() << ", checks: " << rep.checks.size()
        << ", consistency violations: " << rep.lemma4_violations << "\n";
    if (verbose) {
        const Scenario s = Scenario::create(parse_scenario(rep.scenario), rep.rank);
        for (std::size_t i = 0; i < rep.states.size(); ++i)
            out << "    state " << i << ": [" << state_display(s, rep.states[i]) << "] claim "
                << (rep.claims[i] ? "pass" : "FAIL") << "\n";
    }
    for (const auto& n : rep.notes) out << "  note: " << n << "\n";
    for (const auto& c : rep.counterexamples) out << "  counterexample: " << c << "\n";
    out << "  verdict: " << (rep.verified ? "verified" : "REFUTED") << " (deg CH_0(X) in "
        << rep.p << "Z)" << "\n";
}

// -------------------------------------------------------------- subcommands

struct CommonArgs {
    std::string scenario;
    int rank = 0;
    std::string disc = "trivial";
    std::string override_path;
    std::string format = "text";
    bool coords = false;
};

Scenario make_scenario(const CommonArgs& a) {
    const ScenarioName name = parse_scenario(a.scenario);
    if ((name == ScenarioName::e6 || name == ScenarioName::e7) && a.rank != 0)
        throw input_error("scenario '" + a.scenario + "' does not take --rank");
    ScenarioOverrides ov;
    if (!a.override_path.empty()) ov = load_override_file(a.override_path);
    return Scenario::create(name, a.rank, ov);
}

int cmd_center(const std::string& kind_str, int rank, const std::string& format, bool coords,
               std::ostream& out) {
    const Kind kind = parse_kind(kind_str);
    const RootSystem rs = RootSystem::create(kind, rank);
    const bool has_table = kind != Kind::A;
    std::vector<std::string> labels;
    if (has_table) {
        const TitsAlgebraTable table = tits_table(kind, rank);
        for (int v = 1; v <= rank; ++v)
            labels.push_back(table.context().element_name(table.assignment(v)));
    }
    if (format == "json") {
        ordered_json j;
        j["kind"] = kind_name(kind);
        j["rank"] = rank;
        j["center"] = rs.center().display();
        j["order"] = rs.center().order();
        ordered_json restr = ordered_json::array();
        for (int v = 1; v <= rank; ++v) {
            ordered_json rj;
            rj["vertex"] = v;
            rj["name"] = rs.element_name(rs.restriction(v));
            rj["coords"] = rs.restriction(v);
            if (has_table) rj["tits"] = labels[static_cast<std::size_t>(v - 1)];
            restr.push_back(rj);
        }
        j["restrictions"] = restr;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << kind_name(kind) << rank << ": C* = " << rs.center().display()
        << " (order " << rs.center().order() << ")\n";
    for (int v = 1; v <= rank; ++v) {
        out << "  vertex " << v << ": res = "
            << (coords ? vec_display(rs.restriction(v)) : rs.element_name(rs.restriction(v)));
        if (has_table) out << ", tits = " << labels[static_cast<std::size_t>(v - 1)];
        out << "\n";
    }
    return 0;
}

int cmd_xphi(const CommonArgs& a, Int phi, std::ostream& out) {
    const Scenario s = make_scenario(a);
    const bool disc = parse_disc(a.disc);
    const XPhiStages st = x_phi_stages(s, disc, Cocharacter{phi});
    if (a.format == "json") {
        ordered_json j;
        j["scenario"] = a.scenario;
        j["phi"] = phi;
        j["disc"] = disc_str(disc);
        ordered_json stages;
        stages["alpha_preimage"] = st.alpha_preimage.display();
        stages["beta_image"] = st.beta_image.display();
        stages["gamma_preimage"] = subset_json(s, st.gamma_preimage, a.coords);
        stages["fixed"] = subset_json(s, st.fixed, a.coords);
        j["stages"] = stages;
        j["x_phi"] = subset_json(s, st.result, a.coords);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "scenario " << a.scenario << ", phi = " << phi << ", disc " << disc_str(disc) << "\n";
    out << "  alpha^-1({phi})  = " << st.alpha_preimage.display() << "  (in Z)\n";
    out << "  beta image       = " << st.beta_image.display() << "  (in mu(-1) = "
        << s.mu_twist().display() << ")\n";
    out << "  gamma^-1         = " << subset_names(s, st.gamma_preimage, a.coords) << "\n";
    out << "  fixed subgroup   = " << subset_names(s, st.fixed, a.coords) << "\n";
    out << "  X(phi)           = " << subset_names(s, st.result, a.coords) << "\n";
    return 0;
}

int cmd_omega(const CommonArgs& a, Int phi, bool fullprint, int max_print, std::ostream& out) {
    const Scenario s = make_scenario(a);
    const bool disc = parse_disc(a.disc);
    const Subset x = x_phi(s, disc, Cocharacter{phi});
    const GaloisAction& action = s.galois_action(disc);
    const OmegaFamily om = omega(s.root_system(), action, x);
    const auto mins = om.minimal_complements();
    const int rank = s.rank();

    if (a.format == "json") {
        ordered_json j;
        j["scenario"] = a.scenario;
        j["phi"] = phi;
        j["disc"] = disc_str(disc);
        j["x_phi"] = subset_json(s, x, a.coords);
        j["omega_count"] = om.count();
        ordered_json mc = ordered_json::array();
        for (VertexMask m : mins) mc.push_back(mask_vertices(m, rank));
        j["minimal_complements"] = mc;
        if (fullprint) {
            ordered_json all = ordered_json::array();
            for (VertexMask t : om.members()) all.push_back(mask_vertices(t, rank));
            j["members"] = all;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "scenario " << a.scenario << ", phi = " << phi << ", X(phi) = "
        << subset_names(s, x, a.coords) << "\n";
    out << "Omega(phi): " << om.count() << " of " << (std::size_t{1} << rank)
        << " subsets; minimal complements Delta \\ Theta:\n";
    int shown = 0;
    for (VertexMask m : mins) {
        if (shown++ >= max_print) {
            out << "  ... (" << mins.size() - static_cast<std::size_t>(max_print) << " more)\n";
            break;
        }
        out << "  " << mask_display(m, rank) << "\n";
    }
    if (fullprint) {
        out << "all members Theta:\n";
        shown = 0;
        for (VertexMask t : om.members()) {
            if (shown++ >= max_print) {
                out << "  ... (" << om.count() - static_cast<std::size_t>(max_print) << " more)\n";
                break;
            }
            out << "  " << mask_display(t, rank) << "\n";
        }
    }
    return 0;
}

int cmd_special(const CommonArgs& a, Int phi, const std::string& distinguished_str, std::ostream& out) {
    const Scenario s = make_scenario(a);
    const bool disc = parse_disc(a.disc);
    const GaloisAction& action = s.galois_action(disc);
    const int rank = s.rank();

    std::vector<int> verts;
    std::stringstream ss(distinguished_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            verts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw input_error("--distinguished expects a comma-separated vertex list");
        }
    }
    const TitsIndex index{vertices_mask(verts, rank)};

    const Subset x = x_phi(s, disc, Cocharacter{phi});
    const OmegaFamily om = omega(s.root_system(), action, x);
    const bool special = is_f_special(index, om, action);

    const VertexMask theta_min = full_mask(rank) & ~index.distinguished;
    std::vector<Vec> sums;
    for (const auto& orbit : action.orbits(mask_vertices(index.distinguished, rank))) {
        Vec sum = s.root_system().center().zero();
        for (int v : orbit) sum = s.root_system().center().add(sum, s.root_system().restriction(v));
        sums.push_back(sum);
    }
    const Subset sub = subgroup_generated(s.root_system().center(), sums);

    if (a.format == "json") {
        ordered_json j;
        j["scenario"] = a.scenario;
        j["phi"] = phi;
        j["disc"] = disc_str(disc);
        j["distinguished"] = mask_vertices(index.distinguished, rank);
        j["x_phi"] = subset_json(s, x, a.coords);
        j["theta_min"] = mask_vertices(theta_min, rank);
        j["orbit_subgroup"] = subset_json(s, sub, a.coords);
        j["f_special"] = special;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "scenario " << a.scenario << ", phi = " << phi << ", distinguished "
        << mask_display(index.distinguished, rank) << "\n";
    out << "  X(phi)                     = " << subset_names(s, x, a.coords) << "\n";
    out << "  Theta_min = Delta \\ dist   = " << mask_display(theta_min, rank) << "\n";
    out << "  orbit sums over dist give  = " << subset_names(s, sub, a.coords) << "\n";
    out << "  subgroup meets X(phi)      = " << (special ? "yes" : "no") << "\n";
    out << "  phi is f-special           = " << (special ? "yes" : "no")
        << "  (specialness <=> a parabolic defined over the field has type in Omega(phi))\n";
    return 0;
}

int cmd_states(const CommonArgs& a, int variant, std::ostream& out) {
    const Scenario s = make_scenario(a);
    DriverConfig cfg;
    if (variant == 6) cfg.e6_variant = E6Variant::type6;
    else if (variant != 1) throw input_error("--variant must be 1 or 6");
    if (variant == 6 && s.name() != ScenarioName::e6)
        throw input_error("--variant 6 only applies to scenario e6");
    const auto states = enumerate_states(s, cfg);
    if (a.format == "json") {
        ordered_json j;
        j["scenario"] = a.scenario;
        if (s.kind() == Kind::D) j["rank"] = s.rank();
        ordered_json arr = ordered_json::array();
        for (const auto& st : states) arr.push_back(state_json(s, st));
        j["states"] = arr;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "scenario " << a.scenario << ": " << states.size() << " admissible field states\n";
    for (std::size_t i = 0; i < states.size(); ++i)
        out << "  " << i << ": " << state_display(s, states[i]) << "\n";
    return 0;
}

int cmd_verify(const std::string& corollary, bool all, int rank, const std::string& override_path,
               const std::string& format, bool verbose, std::ostream& out) {
    std::vector<Report> reports;
    if (all) {
        if (!override_path.empty()) throw input_error("--override cannot be combined with --all");
        if (rank != 0) throw input_error("--rank cannot be combined with --all");
        reports = verify_all();
    } else {
        ScenarioOverrides ov;
        if (!override_path.empty()) ov = load_override_file(override_path);
        std::optional<int> r;
        if (rank != 0) r = rank;
        reports.push_back(verify_corollary(parse_corollary(corollary), r, {}, ov));
    }
    const bool all_verified =
        std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.verified; });

    if (format == "json") {
        if (reports.size() == 1) {
            out << report_json(reports[0]).dump(2) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            out << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) report_text(out, r, verbose);
        if (reports.size() > 1)
            out << (all_verified ? "all corollaries verified" : "SOME COROLLARIES REFUTED") << "\n";
    }
    return all_verified ? 0 : 1;
}

} // namespace

ScenarioOverrides parse_override_text(const std::string& text, const std::string& filename) {
    return OverrideParser(text, filename).parse();
}

ScenarioOverrides load_override_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open override file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return parse_override_text(text, path);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"normcalc: exact norm-principle calculus for simple algebraic groups"};
    app.require_subcommand(1);

    // center
    std::string c_kind;
    int c_rank = 0;
    std::string c_format = "text";
    bool c_coords = false;
    auto* center = app.add_subcommand("center", "center character group, restrictions, Tits labels");
    center->add_option("--kind", c_kind, "root system type (A, D, E)")->required();
    center->add_option("--rank", c_rank, "rank")->required();
    center->add_option("--format", c_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    center->add_flag("--coords", c_coords, "print raw coordinate vectors");

    // common options factory
    auto add_common = [](CLI::App* sub, CommonArgs& a, bool with_disc = true) {
        sub->add_option("--scenario", a.scenario, "spin, gorth, e6 or e7")->required();
        sub->add_option("--rank", a.rank, "rank n (required for spin/gorth)");
        if (with_disc)
            sub->add_option("--disc", a.disc, "discriminant: trivial or nontrivial (gorth)")
                ->check(CLI::IsMember({"trivial", "nontrivial"}));
        sub->add_option("--override", a.override_path, "scenario override file");
        sub->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--coords", a.coords, "print raw coordinate vectors");
    };

    CommonArgs x_args;
    Int x_phi_val = 0;
    auto* xphi = app.add_subcommand("xphi", "compute X(phi) with intermediate stages");
    add_common(xphi, x_args);
    xphi->add_option("--phi", x_phi_val, "cocharacter")->required();

    CommonArgs o_args;
    Int o_phi_val = 0;
    bool o_full = false;
    int o_max_print = 64;
    auto* om = app.add_subcommand("omega", "compute Omega(phi) as minimal complements");
    add_common(om, o_args);
    om->add_option("--phi", o_phi_val, "cocharacter")->required();
    om->add_flag("--full", o_full, "also list every member of Omega");
    om->add_option("--max-print", o_max_print, "cap on printed entries");

    CommonArgs s_args;
    Int s_phi_val = 0;
    std::string s_dist;
    auto* special = app.add_subcommand("special", "f-special verdict for a Tits index");
    add_common(special, s_args);
    special->add_option("--phi", s_phi_val, "cocharacter")->required();
    special->add_option("--distinguished", s_dist, "comma-separated circled vertices (empty = anisotropic)");

    CommonArgs st_args;
    int st_variant = 1;
    auto* states = app.add_subcommand("states", "list admissible field states");
    add_common(states, st_args, false);
    states->add_option("--variant", st_variant, "e6 variety type: 1 or 6");

    std::string v_corollary;
    bool v_all = false;
    int v_rank = 0;
    std::string v_override;
    std::string v_format = "text";
    bool v_verbose = false;
    auto* verify = app.add_subcommand("verify", "verify a degree-map corollary");
    verify->add_option("--corollary", v_corollary, "springer, bfl, rost, rost6 or e7");
    verify->add_flag("--all", v_all, "verify every corollary (springer/bfl over ranks 3..8)");
    verify->add_option("--rank", v_rank, "rank for springer/bfl");
    verify->add_option("--override", v_override, "scenario override file");
    verify->add_option("--format", v_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("-v,--verbose", v_verbose, "per-state detail");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (center->parsed()) return cmd_center(c_kind, c_rank, c_format, c_coords, out);
        if (xphi->parsed()) return cmd_xphi(x_args, x_phi_val, out);
        if (om->parsed()) return cmd_omega(o_args, o_phi_val, o_full, o_max_print, out);
        if (special->parsed()) return cmd_special(s_args, s_phi_val, s_dist, out);
        if (states->parsed()) return cmd_states(st_args, st_variant, out);
        if (verify->parsed()) {
            if (v_all == !v_corollary.empty())
                throw input_error("verify needs exactly one of --corollary or --all");
            return cmd_verify(v_corollary, v_all, v_rank, v_override, v_format, v_verbose, out);
        }
    } catch (const capability_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace normcalc
