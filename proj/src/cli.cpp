#include "verlinde/cli.hpp"

#include "verlinde/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace verlinde {

namespace {

using json = nlohmann::ordered_json;

json big(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

std::string sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

struct CtxFlags {
  int rank = 0;
  Int level = 0;
  int rank_cap = AlgebraCtx::kDefaultMaxRank;

  void attach(CLI::App* cmd) {
    cmd->add_option("-r,--rank", rank, "r of SL(r)")
        ->required()
        ->check(CLI::Range(2, 64));
    cmd->add_option("-l,--level", level, "level")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--rank-cap", rank_cap, "maximum admitted rank");
  }
  AlgebraCtx make() const { return AlgebraCtx(rank, level, rank_cap); }
};

json weight_list_json(const std::vector<Weight>& ws) {
  json arr = json::array();
  for (const Weight& w : ws) arr.push_back(to_string(w));
  return arr;
}

json row_json(const FusionTable::Row& row) {
  json obj = json::object();
  for (const auto& [w, c] : row) obj[to_string(w)] = big(c);
  return obj;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact sl(r) fusion rings and conformal-block dimensions"};
  app.require_subcommand(1);

  std::string out_path, format = "json", weights_arg, weight_arg, mode =
                                                                      "unshifted";
  std::string lambda1_arg, lambda2_arg, word_arg, nu_arg, lambda_arg;
  int genus = 0;
  bool no_oracle = false, partner = false, check = false;

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list the alcove P_ell(SL(r))");
  CtxFlags enum_flags;
  enum_flags.attach(cmd_enumerate);
  cmd_enumerate->add_option("--out", out_path, "write the report here");
  cmd_enumerate->add_option("--format", format)
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_fuse = app.add_subcommand("fuse", "iterated fusion product");
  CtxFlags fuse_flags;
  fuse_flags.attach(cmd_fuse);
  cmd_fuse->add_option("-w,--weights", weights_arg,
                       "';'-separated weights of ','-separated labels");
  cmd_fuse->add_option("--nu", nu_arg, "report one coefficient N_{..}^{nu}");
  cmd_fuse->add_option("--out", out_path);
  cmd_fuse->add_option("--format", format)
      ->check(CLI::IsMember({"json", "table"}));

  auto* cmd_dim = app.add_subcommand("dim", "conformal-block dimension n_g");
  CtxFlags dim_flags;
  dim_flags.attach(cmd_dim);
  cmd_dim->add_option("-g,--genus", genus)->required()->check(
      CLI::NonNegativeNumber);
  cmd_dim->add_option("-w,--weights", weights_arg);
  cmd_dim->add_flag("--no-oracle", no_oracle,
                    "skip the numeric Verlinde cross-check");
  cmd_dim->add_option("--out", out_path);

  auto* cmd_fold = app.add_subcommand("fold", "alcove folding of a weight");
  CtxFlags fold_flags;
  fold_flags.attach(cmd_fold);
  cmd_fold->add_option("-w,--weight", weight_arg)->required();
  cmd_fold->add_option("--mode", mode)
      ->check(CLI::IsMember({"unshifted", "shifted"}));
  cmd_fold->add_option("--out", out_path);

  auto* cmd_prv = app.add_subcommand("prv", "PRV representatives and partners");
  CtxFlags prv_flags;
  prv_flags.attach(cmd_prv);
  cmd_prv->add_option("--lambda1", lambda1_arg);
  cmd_prv->add_option("--lambda2", lambda2_arg);
  cmd_prv->add_option("--word", word_arg, "e.g. 's1 s2 | 1,0'");
  cmd_prv->add_flag("--partner", partner,
                    "one-marking partner construction for --lambda");
  cmd_prv->add_option("--lambda", lambda_arg);
  cmd_prv->add_option("--out", out_path);

  auto* cmd_smatrix = app.add_subcommand("smatrix", "modular S-matrix dump");
  CtxFlags sm_flags;
  sm_flags.attach(cmd_smatrix);
  std::string sm_format = "csv";
  cmd_smatrix->add_option("--format", sm_format)
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_smatrix->add_flag("--check", check,
                        "include the character-ratio cross-check");
  cmd_smatrix->add_option("--out", out_path);

  auto* cmd_verify =
      app.add_subcommand("verify", "run the verification sweep");
  SweepConfig sweep;
  cmd_verify->add_option("--min-rank", sweep.r_min);
  cmd_verify->add_option("--max-rank", sweep.r_max);
  cmd_verify->add_option("--min-level", sweep.level_min);
  cmd_verify->add_option("--max-level", sweep.level_max);
  cmd_verify->add_option("--min-genus", sweep.genus_min);
  cmd_verify->add_option("--max-genus", sweep.genus_max);
  cmd_verify->add_option("--max-points", sweep.max_points);
  cmd_verify->add_option("--box", sweep.weyl_translation_box);
  cmd_verify->add_option("--rank-cap", sweep.max_rank);
  bool verify_no_oracle = false;
  cmd_verify->add_flag("--no-oracle", verify_no_oracle);
  cmd_verify->add_option("--out", out_path, "write report.json here");

  // CLI11 wants argv-style reversed input.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cmd_enumerate->parsed()) {
    const AlgebraCtx ctx = enum_flags.make();
    const std::vector<Weight> alcove = enumerate_alcove(ctx);
    if (format == "table") {
      std::string text;
      for (const Weight& w : alcove) text += to_string(w) + "\n";
      emit(text, out_path, out);
    } else {
      json j;
      j["r"] = ctx.r();
      j["level"] = ctx.level();
      j["count"] = alcove.size();
      j["weights"] = weight_list_json(alcove);
      emit(j.dump(2) + "\n", out_path, out);
    }
    return 0;
  }

  if (cmd_fuse->parsed()) {
    const AlgebraCtx ctx = fuse_flags.make();
    const std::vector<Weight> weights =
        parse_weight_list(weights_arg, ctx.n());
    FusionTable table(ctx);
    const FusionTable::Row row = table.fuse_multiset(weights);
    json j;
    j["r"] = ctx.r();
    j["level"] = ctx.level();
    j["weights"] = weight_list_json(weights);
    if (!nu_arg.empty()) {
      if (weights.size() != 2)
        throw std::invalid_argument("--nu expects exactly two weights");
      const Weight nu = parse_weight(nu_arg, ctx.n());
      j["lambda"] = to_string(weights[0]);
      j["mu"] = to_string(weights[1]);
      j["nu"] = to_string(nu);
      j["N"] = big(table.fusion_coeff(weights[0], weights[1], nu));
    } else {
      j["product"] = row_json(row);
    }
    if (format == "table") {
      std::string text;
      for (const auto& [w, c] : row)
        text += to_string(w) + "  " + c.str() + "\n";
      emit(text, out_path, out);
    } else {
      emit(j.dump(2) + "\n", out_path, out);
    }
    return 0;
  }

  if (cmd_dim->parsed()) {
    const AlgebraCtx ctx = dim_flags.make();
    const std::vector<Weight> weights =
        parse_weight_list(weights_arg, ctx.n());
    FusionTable table(ctx);
    BlockCache cache;
    const BigInt n = n_g(cache, table, genus, weights);
    json j;
    j["r"] = ctx.r();
    j["level"] = ctx.level();
    j["genus"] = genus;
    j["weights"] = weight_list_json(weights);
    j["n"] = big(n);
    if (!no_oracle) {
      const SMatrix sm = build_smatrix(ctx);
      const BigInt oracle = verlinde_numeric(sm, genus, weights);
      j["oracle"] = big(oracle);
      j["match"] = (oracle == n);
    }
    emit(j.dump(2) + "\n", out_path, out);
    return 0;
  }

  if (cmd_fold->parsed()) {
    const AlgebraCtx ctx = fold_flags.make();
    const Weight w = parse_weight(weight_arg, ctx.n());
    const FoldResult fr =
        mode == "shifted" ? fold_shifted(ctx, w) : fold_unshifted(ctx, w);
    json j;
    j["r"] = ctx.r();
    j["level"] = ctx.level();
    j["weight"] = to_string(w);
    j["mode"] = mode;
    j["rep"] = fr.on_wall ? json(nullptr) : json(to_string(fr.rep));
    j["sign"] = fr.sign;
    j["on_wall"] = fr.on_wall;
    j["steps"] = fr.steps;
    emit(j.dump(2) + "\n", out_path, out);
    return 0;
  }

  if (cmd_prv->parsed()) {
    const AlgebraCtx ctx = prv_flags.make();
    json j;
    j["r"] = ctx.r();
    j["level"] = ctx.level();
    FusionTable table(ctx);
    if (partner) {
      if (lambda_arg.empty())
        throw std::invalid_argument("--partner requires --lambda");
      const Weight lambda = parse_weight(lambda_arg, ctx.n());
      const Weight seed = prv_seed(ctx, lambda);
      const Weight mu = prv_partner(ctx, lambda);
      const WeylWord word = prv_seed_word(ctx);
      const BigInt n0 = table.fusion_coeff(lambda, mu, mu);
      j["lambda"] = to_string(lambda);
      j["word"] = to_string(word);
      j["mu_raw"] = to_string(seed);
      j["eq3"] = verify_eq3(ctx, lambda, seed, word);
      j["mu"] = to_string(mu);
      j["n0"] = big(n0);
      j["ok"] = j["eq3"].get<bool>() && n0 >= 1;
    } else {
      if (lambda1_arg.empty() || lambda2_arg.empty())
        throw std::invalid_argument("prv requires --lambda1 and --lambda2");
      const Weight l1 = parse_weight(lambda1_arg, ctx.n());
      const Weight l2 = parse_weight(lambda2_arg, ctx.n());
      const WeylWord word = parse_weyl_word(word_arg, ctx.n());
      const Weight rep = prv_fold(ctx, l1, l2, word);
      const BigInt mult = table.fusion_coeff(l1, l2, rep);
      j["lambda1"] = to_string(l1);
      j["lambda2"] = to_string(l2);
      j["word"] = to_string(word);
      j["rep"] = to_string(rep);
      j["multiplicity"] = big(mult);
      j["ok"] = mult >= 1;
    }
    emit(j.dump(2) + "\n", out_path, out);
    return j["ok"].get<bool>() ? 0 : 1;
  }

  if (cmd_smatrix->parsed()) {
    const AlgebraCtx ctx = sm_flags.make();
    const SMatrix sm = build_smatrix(ctx);
    if (sm_format == "csv") {
      std::string text;
      for (Eigen::Index i = 0; i < sm.entries.rows(); ++i) {
        for (Eigen::Index k = 0; k < sm.entries.cols(); ++k) {
          if (k) text += ',';
          text += sig12(sm.entries(i, k).real()) + ',' +
                  sig12(sm.entries(i, k).imag());
        }
        text += '\n';
      }
      emit(text, out_path, out);
    } else {
      json j;
      j["r"] = ctx.r();
      j["level"] = ctx.level();
      j["kappa"] = sm.kappa;
      j["basis"] = weight_list_json(sm.basis);
      j["unitarity_defect"] = sig12(smatrix_unitarity_defect(sm));
      j["symmetry_defect"] = sig12(smatrix_symmetry_defect(sm));
      if (check)
        j["character_deviation"] =
            sig12(smatrix_character_deviation(ctx, sm));
      json rows = json::array();
      for (Eigen::Index i = 0; i < sm.entries.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < sm.entries.cols(); ++k)
          row.push_back({sig12(sm.entries(i, k).real()),
                         sig12(sm.entries(i, k).imag())});
        rows.push_back(std::move(row));
      }
      j["entries"] = std::move(rows);
      emit(j.dump(2) + "\n", out_path, out);
    }
    return 0;
  }

  // verify
  sweep.oracle_checks = !verify_no_oracle;
  const SweepReport report = run_sweep(sweep);
  emit(report.to_json(sweep), out_path, out);
  if (!report.complete) return 3;
  return report.violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace verlinde
