// Command-line front end: interactive play on stdin, strategy simulation,
// strategy trees, the regime classifier, the escape chain and the HTTP
// session service.

#include <csignal>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "intergame/http.hpp"
#include "intergame/intergame.hpp"

using namespace intergame;

namespace {

struct VariantArgs {
  std::string kind = "schmidt";
  std::string alpha = "4/5";
  std::string beta = "1/2";
  std::string shrink = "1/2";

  void add_to(CLI::App& app) {
    app.add_option("--variant", kind, "banach-mazur (bm), schmidt or mcmullen")->capture_default_str();
    app.add_option("--alpha", alpha, "Alice's ratio (schmidt)")->capture_default_str();
    app.add_option("--beta", beta, "Bob's ratio (schmidt, mcmullen)")->capture_default_str();
    app.add_option("--shrink", shrink, "Bob's shrink cap (banach-mazur), or 'none'")->capture_default_str();
  }

  GameVariant get() const {
    json params = json::object();
    switch (parse_game_kind(kind)) {
      case GameKind::banach_mazur:
        if (shrink != "none") params["shrink"] = shrink;
        break;
      case GameKind::schmidt:
        params["alpha"] = alpha;
        params["beta"] = beta;
        break;
      case GameKind::mcmullen: params["beta"] = beta; break;
    }
    GameVariant v = io::variant(kind, params);
    v.validate();
    return v;
  }
};

struct OpeningArgs {
  std::string lo, hi;

  void add_to(CLI::App& app) {
    app.add_option("--b0-lo", lo, "left end of a fixed opening move");
    app.add_option("--b0-hi", hi, "right end of a fixed opening move");
  }

  std::optional<Interval> get() const {
    if (lo.empty() && hi.empty()) return std::nullopt;
    if (lo.empty() || hi.empty()) throw Error(ErrorCode::precondition, "--b0-lo and --b0-hi go together");
    return Interval(Rational::parse(lo), Rational::parse(hi));
  }
};

/// "undecidable", "rationals", "dyadic" or "co-singleton:<p/q>".
TargetDescriptor parse_target(const std::string& s) {
  if (s == "undecidable") return TargetDescriptor::undecidable();
  if (s == "rationals" || s == "dyadic") return TargetDescriptor::enumeration(DenseEnumeration(parse_enumeration(s)));
  const std::string prefix = "co-singleton:";
  if (s.rfind(prefix, 0) == 0) return TargetDescriptor::co_singleton(Rational::parse(s.substr(prefix.size())));
  throw Error(ErrorCode::parse_error, "unknown target '" + s + "'");
}

std::string with_seed(const std::string& name, std::uint64_t seed) {
  return name == "random-legal" ? name + ":" + std::to_string(seed) : name;
}

void print_state(std::ostream& out, const SessionView& v, std::size_t from) {
  const auto& h = v.state.history();
  for (std::size_t k = from; k < h.size(); ++k) {
    out << "move " << k << " " << to_string(h[k].player) << ": " << to_string(h[k].interval) << "\n";
  }
}

void print_hint(std::ostream& out, const MoveHint& h) {
  out << "hint: " << to_string(h.mover) << " moves";
  if (h.host) out << " inside " << to_string(*h.host);
  if (h.exact_length) out << ", length exactly " << *h.exact_length;
  if (h.max_length) out << ", length at most " << *h.max_length;
  out << "\n";
  for (const auto& r : h.regions) {
    out << "  region " << to_string(r.region);
    if (r.left_endpoints) out << ", left end in " << to_string(*r.left_endpoints);
    out << "\n";
  }
}

/// Reads "lo hi" per line; "hint" prints the legal region, '#' starts a
/// comment. Illegal moves are reported and the prompt repeats.
int run_play(const SessionConfig& cfg, std::istream& in, std::ostream& out) {
  SessionManager sessions;
  SessionView v = sessions.create_session(cfg);
  print_state(out, v, 0);
  std::size_t shown = v.state.history().size();
  std::string line;
  while (v.status != SessionStatus::finished) {
    out << to_string(*v.human) << "> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\ninput ended before the game did\n";
      return 1;
    }
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string lo, hi, extra;
    if (!(words >> lo)) continue;
    if (lo == "hint") {
      print_hint(out, sessions.hint_legal(v.id));
      continue;
    }
    if (!(words >> hi) || (words >> extra)) {
      out << "expected: <lo> <hi>, or hint\n";
      continue;
    }
    try {
      v = sessions.submit_move(v.id, Interval(Rational::parse(lo), Rational::parse(hi)));
    } catch (const Error& e) {
      out << "rejected: " << e.what() << "\n";
      continue;
    }
    print_state(out, v, shown);
    shown = v.state.history().size();
  }
  out << "bracket: " << to_string(bracket(v.state)) << "\n";
  out << "verdict: " << to_string(v.result->verdict) << "\n";
  out << "transcript: " << serialize(transcript_of(v)) << "\n";
  return 0;
}

httplib::Server* running_server = nullptr;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact interval games: play, simulate, build strategy trees, classify parameters, serve sessions"};
  app.require_subcommand(1);

  VariantArgs play_variant, sim_variant, tree_variant;
  OpeningArgs play_b0, sim_b0, tree_b0;

  auto* play_cmd = app.add_subcommand("play", "play one side interactively on stdin");
  play_variant.add_to(*play_cmd);
  play_b0.add_to(*play_cmd);
  std::string human = "alice", engine, play_target = "undecidable";
  std::size_t play_horizon = 5;
  std::uint64_t play_seed = 0;
  play_cmd->add_option("--human", human, "side played from stdin")->capture_default_str();
  play_cmd->add_option("--engine", engine, "strategy for the other side")->required();
  play_cmd->add_option("--horizon", play_horizon, "rounds after the opening")->capture_default_str();
  play_cmd->add_option("--target", play_target, "target set")->capture_default_str();
  play_cmd->add_option("--seed", play_seed, "seed for random-legal")->capture_default_str();

  auto* sim_cmd = app.add_subcommand("simulate", "strategy against strategy; prints the transcript");
  sim_variant.add_to(*sim_cmd);
  sim_b0.add_to(*sim_cmd);
  std::string bob_name, alice_name, sim_target = "undecidable";
  std::size_t sim_horizon = 10;
  std::uint64_t sim_seed = 0;
  sim_cmd->add_option("--bob", bob_name, "Bob's strategy")->required();
  sim_cmd->add_option("--alice", alice_name, "Alice's strategy")->required();
  sim_cmd->add_option("--horizon", sim_horizon, "rounds after the opening")->capture_default_str();
  sim_cmd->add_option("--target", sim_target, "target set")->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "seed for random-legal (Alice gets seed + 1)")->capture_default_str();

  auto* tree_cmd = app.add_subcommand("tree", "build and verify a strategy tree");
  tree_variant.add_to(*tree_cmd);
  tree_b0.add_to(*tree_cmd);
  std::string brancher = "split", pinned = "alice", strategy_name;
  std::size_t depth = 3;
  bool table = false, fragments = false;
  tree_cmd->add_option("--brancher", brancher, "split, endpoint or complementary")->capture_default_str();
  tree_cmd->add_option("--pinned", pinned, "side whose strategy is fixed")->capture_default_str();
  tree_cmd->add_option("--strategy", strategy_name, "the fixed strategy")->required();
  tree_cmd->add_option("--depth", depth, "tree depth")->capture_default_str();
  tree_cmd->add_flag("--table", table, "print per-level CSV instead of JSON");
  tree_cmd->add_flag("--fragments", fragments, "include move fragments in the JSON");

  auto* classify_cmd = app.add_subcommand("classify", "regime of a Schmidt pair, or a CSV grid");
  std::string c_alpha, c_beta;
  unsigned grid = 0;
  classify_cmd->add_option("--alpha", c_alpha, "Alice's ratio");
  classify_cmd->add_option("--beta", c_beta, "Bob's ratio");
  classify_cmd->add_option("--grid", grid, "emit every pair with denominators up to N as CSV");

  auto* chain_cmd = app.add_subcommand("chain", "evaluate the escape-bound chain exactly");
  std::string ch_alpha, ch_beta;
  chain_cmd->add_option("--alpha", ch_alpha, "Alice's ratio")->required();
  chain_cmd->add_option("--beta", ch_beta, "Bob's ratio")->required();

  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP session service");
  std::string host = "127.0.0.1", store_dir;
  int port = 8080;
  std::size_t max_tree_depth = 12;
  serve_cmd->add_option("--host", host, "bind address")->capture_default_str();
  serve_cmd->add_option("--port", port, "port")->capture_default_str();
  serve_cmd->add_option("--store", store_dir, "transcript directory (none: transcripts are not kept)");
  serve_cmd->add_option("--max-tree-depth", max_tree_depth, "deepest tree the service builds")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*play_cmd) {
      SessionConfig cfg;
      cfg.variant = play_variant.get();
      cfg.human = parse_player(human);
      cfg.engine_strategy = with_seed(engine, play_seed);
      cfg.target = parse_target(play_target);
      cfg.horizon = play_horizon;
      cfg.b0 = play_b0.get();
      return run_play(cfg, std::cin, std::cout);
    }
    if (*sim_cmd) {
      const TargetDescriptor target = parse_target(sim_target);
      const std::optional<Interval> b0 = sim_b0.get();
      const StrategyContext ctx{b0, target};
      const Strategy bob = make_strategy(with_seed(bob_name, sim_seed), Player::bob, ctx);
      const Strategy alice = make_strategy(with_seed(alice_name, sim_seed + 1), Player::alice, ctx);
      std::cout << serialize(play(sim_variant.get(), bob, alice, b0, sim_horizon, target)) << "\n";
      return 0;
    }
    if (*tree_cmd) {
      TreeOptions opts;
      opts.opening = tree_b0.get();
      const Player side = parse_player(pinned);
      const Strategy s = make_strategy(strategy_name, side, StrategyContext{opts.opening, {}});
      const StrategyTree t = build_tree(tree_variant.get(), s, parse_brancher(brancher), depth, opts);
      const auto reports = verify_tree(t);
      if (table) {
        std::cout << level_table(reports);
      } else {
        json out = io::to_json(t, fragments);
        out["levels"] = json::array();
        for (const auto& r : reports) out["levels"].push_back(io::to_json(r));
        std::cout << out.dump() << "\n";
      }
      return 0;
    }
    if (*classify_cmd) {
      if (grid != 0) {
        std::cout << regime_table(grid);
        return 0;
      }
      if (c_alpha.empty() || c_beta.empty()) throw Error(ErrorCode::precondition, "give --alpha and --beta, or --grid");
      const Rational a = Rational::parse(c_alpha), b = Rational::parse(c_beta);
      json out = io::to_json(classify(a, b));
      out["alpha"] = a.str();
      out["beta"] = b.str();
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*chain_cmd) {
      std::cout << io::to_json(verify_chain(Rational::parse(ch_alpha), Rational::parse(ch_beta))).dump() << "\n";
      return 0;
    }
    if (*serve_cmd) {
      std::shared_ptr<TranscriptStore> store;
      if (!store_dir.empty()) store = std::make_shared<TranscriptStore>(store_dir);
      auto api = std::make_shared<Api>(std::make_shared<SessionManager>(store), max_tree_depth);
      httplib::Server server;
      mount(server, api);
      running_server = &server;
      std::signal(SIGINT, [](int) { running_server->stop(); });
      std::signal(SIGTERM, [](int) { running_server->stop(); });
      std::cerr << "listening on " << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
