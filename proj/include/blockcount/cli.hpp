#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "selftest.hpp"

namespace blockcount::cli
{

using ordered_json = nlohmann::ordered_json;

struct cli_parse_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

namespace detail
{

inline Labels parse_labels(const std::string &s, int rank)
{
    Labels out;
    std::string cur;
    for (char c : s + ",")
    {
        if (c == ',')
        {
            if (cur.empty())
                throw cli_parse_error("empty weight component in '" + s + "'");
            try
            {
                size_t used = 0;
                out.push_back(std::stoi(cur, &used));
                if (used != cur.size())
                    throw std::invalid_argument(cur);
            }
            catch (const std::exception &)
            {
                throw cli_parse_error("bad weight component '" + cur + "'");
            }
            cur.clear();
        }
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    if (static_cast<int>(out.size()) != rank)
        throw cli_parse_error("weight '" + s + "' does not have " + std::to_string(rank) +
                              " components");
    return out;
}

inline std::vector<Labels> parse_labels_list(const std::string &s, int rank)
{
    std::vector<Labels> out;
    if (s.empty())
        return out;
    size_t start = 0;
    for (;;)
    {
        size_t pos = s.find(';', start);
        out.push_back(parse_labels(s.substr(start, pos - start), rank));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

inline ordered_json labels_json(const Labels &w) { return ordered_json(w); }

inline SimpleLieAlgebra algebra_arg(const std::string &s)
{
    try
    {
        return parse_algebra(s);
    }
    catch (const domain_error &e)
    {
        throw cli_parse_error(e.what());
    }
}

inline ordered_json weight_vector_json(const WeightVector &wv)
{
    ordered_json arr = ordered_json::array();
    for (const auto &[w, m] : wv)
        arr.push_back({{"weight", labels_json(w)}, {"mult", m.str()}});
    return arr;
}

struct Emitter
{
    std::ostream &out;
    bool json;

    void emit(const ordered_json &query, const ordered_json &result, bool exact,
              const std::string &provenance, const std::string &human)
    {
        if (json)
        {
            ordered_json j;
            j["schema"] = "1";
            j["query"] = query;
            j["result"] = result;
            j["exact"] = exact;
            j["provenance"] = provenance;
            out << j.dump(2) << "\n";
        }
        else
            out << human << "\n";
    }
};

} // namespace detail

/// Runs one CLI invocation. Returns 0 on success, 2 on parse errors, 3 on
/// domain errors, 4 on internal cross-check failures.
inline int run(std::vector<std::string> args, std::ostream &out = std::cout,
               std::ostream &err = std::cerr)
{
    CLI::App app{"exact conformal-block and affine representation toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string algebra_str, weight_str, left_str, right_str, insertions_str, mode_str,
        method_str = "exact";
    int level = 1, genus = 0, depth = 2, genus_theta = 1;

    auto *alcove_cmd = app.add_subcommand("alcove", "enumerate the level alcove");
    alcove_cmd->add_option("algebra", algebra_str)->required();
    alcove_cmd->add_option("--level", level)->required();

    auto *index_cmd = app.add_subcommand("index", "Dynkin index of an irreducible module");
    index_cmd->add_option("algebra", algebra_str)->required();
    index_cmd->add_option("--weight", weight_str)->required();

    auto *conf_cmd = app.add_subcommand("conformal-check", "conformal embedding criterion");
    conf_cmd->add_option("mode", mode_str, "'ad' (g -> so(dim g)) or 'ad-sl'")->required();
    conf_cmd->add_option("algebra", algebra_str)->required();

    auto *charge_cmd = app.add_subcommand("charge", "Sugawara central charge");
    charge_cmd->add_option("algebra", algebra_str)->required();
    charge_cmd->add_option("--level", level)->required();

    auto *fuse_cmd = app.add_subcommand("fuse", "level fusion product");
    fuse_cmd->add_option("algebra", algebra_str)->required();
    fuse_cmd->add_option("--level", level)->required();
    fuse_cmd->add_option("--left", left_str)->required();
    fuse_cmd->add_option("--right", right_str)->required();

    auto *verlinde_cmd = app.add_subcommand("verlinde", "conformal-block dimension");
    verlinde_cmd->add_option("algebra", algebra_str)->required();
    verlinde_cmd->add_option("--level", level)->required();
    verlinde_cmd->add_option("--genus", genus);
    verlinde_cmd->add_option("--insertions", insertions_str, "semicolon-separated weights");
    verlinde_cmd->add_option("--method", method_str, "exact | smatrix | both");

    auto *center_cmd = app.add_subcommand("center", "center of the simply connected group");
    center_cmd->add_option("algebra", algebra_str)->required();
    center_cmd->add_option("--level", level);
    center_cmd->add_option("--weight", weight_str);

    auto *char_cmd = app.add_subcommand("character", "truncated graded character");
    char_cmd->add_option("algebra", algebra_str)->required();
    char_cmd->add_option("--level", level)->required();
    char_cmd->add_option("--weight", weight_str)->required();
    char_cmd->add_option("--depth", depth);
    std::string char_method = "freudenthal";
    char_cmd->add_option("--method", char_method, "freudenthal | weyl-kac | check");

    auto *branch_cmd = app.add_subcommand("branch", "adjoint conformal branching");
    branch_cmd->add_option("algebra", algebra_str)->required();
    branch_cmd->add_option("--depth", depth);

    auto *theta_cmd = app.add_subcommand("theta", "theta characteristic counts");
    theta_cmd->add_option("--genus", genus_theta)->required();

    auto *casimir_cmd = app.add_subcommand("casimir", "projection and Casimir identities");
    casimir_cmd->add_option("algebra", algebra_str)->required();

    auto *selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try
    {
        app.parse(rev);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
        {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    detail::Emitter em{out, json};
    try
    {
        if (*alcove_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            auto alc = root_system(g).alcove(level);
            ordered_json res = ordered_json::array();
            std::string human = g.name() + " level " + std::to_string(level) + ": " +
                                std::to_string(alc.size()) + " weights";
            for (const auto &w : alc)
            {
                res.push_back(detail::labels_json(w));
                human += " [";
                for (size_t i = 0; i < w.size(); ++i)
                    human += (i ? "," : "") + std::to_string(w[i]);
                human += "]";
            }
            em.emit({{"subcommand", "alcove"}, {"algebra", g.name()}, {"level", level}},
                    res, true, "alcove-enumeration", human);
        }
        else if (*index_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            Labels w = detail::parse_labels(weight_str, g.rank);
            Rat idx = dynkin_index_irrep(g, w);
            em.emit({{"subcommand", "index"},
                     {"algebra", g.name()},
                     {"weight", detail::labels_json(w)}},
                    rat_str(idx), true, "weyl-dimension-quadratic-casimir",
                    "index = " + rat_str(idx));
        }
        else if (*conf_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            EmbeddingSpec e;
            if (mode_str == "ad")
                e = adjoint_embedding(g);
            else if (mode_str == "ad-sl")
                e = adjoint_into_sl(g);
            else
                throw cli_parse_error("unknown conformal-check mode '" + mode_str + "'");
            auto check = is_conformal(e);
            ordered_json res = {{"conformal", check.conformal},
                                {"lhs", rat_str(check.lhs)},
                                {"rhs", rat_str(check.rhs)},
                                {"index", rat_str(check.index)}};
            em.emit({{"subcommand", "conformal-check"},
                     {"mode", mode_str},
                     {"algebra", g.name()}},
                    res, true, "central-charge-criterion",
                    std::string(check.conformal ? "true" : "false") + " with witness " +
                        rat_str(check.lhs) + " = " + rat_str(check.rhs));
        }
        else if (*charge_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            Rat c = central_charge(g, level);
            em.emit({{"subcommand", "charge"}, {"algebra", g.name()}, {"level", level}},
                    rat_str(c), true, "sugawara", "c = " + rat_str(c));
        }
        else if (*fuse_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            Labels a = detail::parse_labels(left_str, g.rank);
            Labels b = detail::parse_labels(right_str, g.rank);
            WeightVector f = fuse(g, level, a, b);
            std::string human;
            for (const auto &[w, m] : f)
            {
                human += human.empty() ? "" : " + ";
                human += m.str() + "*[";
                for (size_t i = 0; i < w.size(); ++i)
                    human += (i ? "," : "") + std::to_string(w[i]);
                human += "]";
            }
            em.emit({{"subcommand", "fuse"},
                     {"algebra", g.name()},
                     {"level", level},
                     {"left", detail::labels_json(a)},
                     {"right", detail::labels_json(b)}},
                    detail::weight_vector_json(f), true, "kac-walton", human);
        }
        else if (*verlinde_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            VerlindeProblem p{g, level, genus,
                              detail::parse_labels_list(insertions_str, g.rank)};
            Int value;
            std::string provenance;
            bool exact = true;
            if (method_str == "exact")
            {
                value = verlinde_dim_exact(p);
                provenance = "factorization-recursion";
            }
            else if (method_str == "smatrix")
            {
                value = verlinde_dim(p);
                provenance = "kac-peterson-s-matrix";
                exact = false;
            }
            else if (method_str == "both")
            {
                value = verlinde_dim_exact(p);
                if (verlinde_dim(p) != value)
                    throw crosscheck_error("exact and S-matrix Verlinde dimensions differ");
                provenance = "factorization-recursion+kac-peterson-s-matrix";
            }
            else
                throw cli_parse_error("unknown verlinde method '" + method_str + "'");
            ordered_json ins = ordered_json::array();
            for (const auto &w : p.insertions)
                ins.push_back(detail::labels_json(w));
            em.emit({{"subcommand", "verlinde"},
                     {"algebra", g.name()},
                     {"level", level},
                     {"genus", genus},
                     {"insertions", ins}},
                    value.str(), exact, provenance, value.str());
        }
        else if (*center_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            auto group = center_group(g);
            ordered_json elems = ordered_json::array();
            for (const auto &sigma : group)
            {
                ordered_json e = {{"node_perm", sigma.node_perm}};
                if (!weight_str.empty())
                {
                    Labels w = detail::parse_labels(weight_str, g.rank);
                    e["image"] = detail::labels_json(act(sigma, level, w));
                }
                elems.push_back(e);
            }
            em.emit({{"subcommand", "center"},
                     {"algebra", g.name()},
                     {"level", level},
                     {"weight", weight_str}},
                    {{"order", group.size()}, {"elements", elems}}, true,
                    "affine-diagram-automorphisms",
                    "|Z| = " + std::to_string(group.size()));
        }
        else if (*char_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            Labels w = detail::parse_labels(weight_str, g.rank);
            GradedCharacter ch{g, level, w, 0, {}};
            std::string provenance;
            if (char_method == "freudenthal")
            {
                ch = graded_character_freudenthal(g, level, w, depth);
                provenance = "affine-freudenthal";
            }
            else if (char_method == "weyl-kac")
            {
                ch = graded_character_weyl_kac(g, level, w, depth);
                provenance = "numerator-denominator-division";
            }
            else if (char_method == "check")
            {
                ch = crosschecked_character(g, level, w, depth);
                provenance = "affine-freudenthal+numerator-denominator-division";
            }
            else
                throw cli_parse_error("unknown character method '" + char_method + "'");
            ordered_json layers = ordered_json::array();
            std::string human;
            for (int d = 0; d <= depth; ++d)
            {
                ordered_json layer = ordered_json::array();
                for (const auto &[mu, m] : ch.layers[d])
                    layer.push_back({{"weight", detail::labels_json(mu)}, {"mult", m.str()}});
                layers.push_back(
                    {{"grade", d}, {"dim", ch.layer_dim(d).str()}, {"dominant", layer}});
                human += (d ? " " : "") + std::string("dim[") + std::to_string(d) +
                         "]=" + ch.layer_dim(d).str();
            }
            em.emit({{"subcommand", "character"},
                     {"algebra", g.name()},
                     {"level", level},
                     {"weight", detail::labels_json(w)},
                     {"depth", depth}},
                    layers, true, provenance, human);
        }
        else if (*branch_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            BranchingResult br = branch_adjoint_vacuum(g, depth);
            ordered_json heads = ordered_json::array();
            std::string human;
            for (const auto &h : br.heads)
            {
                heads.push_back({{"weight", detail::labels_json(h.weight)},
                                 {"offset", h.offset},
                                 {"mult", h.mult.str()}});
                human += human.empty() ? "" : " + ";
                human += h.mult.str() + "*H[";
                for (size_t i = 0; i < h.weight.size(); ++i)
                    human += (i ? "," : "") + std::to_string(h.weight[i]);
                human += "]@" + std::to_string(h.offset);
            }
            ordered_json residual = ordered_json::array();
            for (const auto &r : br.residual)
                residual.push_back(r.str());
            human += br.clean() ? " (residual 0)" : " (RESIDUAL NONZERO)";
            em.emit({{"subcommand", "branch"}, {"algebra", g.name()}, {"depth", depth}},
                    {{"heads", heads}, {"residual", residual}}, true,
                    "graded-restriction-peel", human);
        }
        else if (*theta_cmd)
        {
            Int even = count_even(genus_theta), odd = count_odd(genus_theta);
            em.emit({{"subcommand", "theta"}, {"genus", genus_theta}},
                    {{"even", even.str()}, {"odd", odd.str()}}, true,
                    "arf-exhaustive-enumeration",
                    "even = " + even.str() + ", odd = " + odd.str());
        }
        else if (*casimir_cmd)
        {
            SimpleLieAlgebra g = detail::algebra_arg(algebra_str);
            auto sc = structure_constants(g);
            auto P = adjoint_projection(sc);
            bool proj_ok = true;
            for (int k = 0; k < sc.dimension; ++k)
            {
                auto coef = P.apply(sc.ad(k));
                for (int i = 0; i < sc.dimension; ++i)
                    if (coef[i] != (i == k ? 1 : 0))
                        proj_ok = false;
            }
            auto prod = rat_mul(casimir_tensor(sc).gamma, killing_form(sc));
            bool contraction_ok = true;
            for (int i = 0; i < sc.dimension; ++i)
                for (int j = 0; j < sc.dimension; ++j)
                    if (prod[i][j] != (i == j ? 1 : 0))
                        contraction_ok = false;
            if (!proj_ok || !contraction_ok)
                throw crosscheck_error("projection or Casimir identity failed");
            em.emit({{"subcommand", "casimir"}, {"algebra", g.name()}},
                    {{"dimension", sc.dimension},
                     {"projection_identity", proj_ok},
                     {"contraction_identity", contraction_ok},
                     {"complement_dim", orthogonal_complement_dim(sc)}},
                    true, "exact-structure-constants",
                    "dim " + std::to_string(sc.dimension) +
                        ", projection and contraction identities hold");
        }
        else if (*selftest_cmd)
        {
            bool all = true;
            for (const auto &r : run_acceptance_suite())
            {
                out << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL")
                    << " (" << r.name << ")" << r.detail << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 4;
        }
    }
    catch (const cli_parse_error &e)
    {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }
    catch (const crosscheck_error &e)
    {
        err << "cross-check failure: " << e.what() << "\n";
        return 4;
    }
    catch (const domain_error &e)
    {
        err << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace blockcount::cli
