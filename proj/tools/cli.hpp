#pragma once

#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superrsk/io.hpp"
#include "superrsk/littlewood_richardson.hpp"
#include "superrsk/superrsk.hpp"

namespace superrsk::cli {

// Bad flags, malformed JSON, or a missing input; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string alphabet = "std:1,1";
  std::string bottom_alphabet;
  std::string input_json;
  bool json = false;
  bool trace = false;
  bool witnesses = false;
  bool left = false;
  std::string method = "all";
  std::string lambda, mu, nu, shape;
  std::uint64_t seed = 1;
  int count = 1000;
  std::vector<std::string> args;
};

namespace detail {

inline std::string tableau_text(const Tableau& t) { return render(t); }
inline std::string skew_text(const SkewTableau& t) { return render(t); }

inline std::string pair_text(const TableauPair& p) {
  return "T:\n" + tableau_text(p.insertion) + "Q:\n" + tableau_text(p.recording);
}

inline std::string path_text(const SlidePath& p) {
  std::string out = "(" + std::to_string(p.start.row) + "," + std::to_string(p.start.col) + ")";
  for (auto m : p.moves) {
    switch (m) {
      case SlideMove::from_right: out += " right"; break;
      case SlideMove::from_below: out += " below"; break;
      case SlideMove::from_left: out += " left"; break;
      case SlideMove::from_above: out += " above"; break;
    }
  }
  return out + " -> (" + std::to_string(p.end.row) + "," + std::to_string(p.end.col) + ")";
}

inline Partition partition_arg(const std::string& name, const std::string& text) {
  if (text.empty()) throw UsageError("--" + name + " is required");
  return Partition::parse(text);
}

inline json partition_json(const Partition& p) { return p.parts(); }

// Input from --input-json or positionals, never both.
class Input {
 public:
  Input(const Options& o, std::istream& in) : opt_(o) {
    if (o.input_json.empty()) return;
    if (!o.args.empty()) throw UsageError("--input-json cannot be combined with positional arguments");
    std::string text = o.input_json;
    if (text == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    try {
      doc_ = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("invalid JSON input: ") + e.what());
    }
    if (!doc_->is_object()) throw UsageError("JSON input must be an object");
  }

  bool from_json() const { return doc_.has_value(); }
  const json& doc() const { return *doc_; }

  SignedAlphabet top_alphabet() const {
    if (doc_ && doc_->contains("top_alphabet")) return SignedAlphabet::parse(field("top_alphabet").get<std::string>());
    if (doc_ && doc_->contains("alphabet")) return SignedAlphabet::parse(field("alphabet").get<std::string>());
    return SignedAlphabet::parse(opt_.alphabet);
  }
  SignedAlphabet bottom_alphabet() const {
    if (doc_ && doc_->contains("bottom_alphabet"))
      return SignedAlphabet::parse(field("bottom_alphabet").get<std::string>());
    if (!opt_.bottom_alphabet.empty() && !(doc_ && doc_->contains("alphabet")))
      return SignedAlphabet::parse(opt_.bottom_alphabet);
    return top_alphabet();
  }
  SignedAlphabet alphabet() const { return top_alphabet(); }

  const json& field(const std::string& key) const {
    if (!doc_->contains(key)) throw UsageError("JSON input lacks \"" + key + "\"");
    return doc_->at(key);
  }

  // k-th positional, with a usage error naming what is missing.
  const std::string& positional(std::size_t k, const std::string& what) const {
    if (k >= opt_.args.size()) throw UsageError("missing " + what);
    return opt_.args[k];
  }
  void expect_positionals(std::size_t n) const {
    if (!doc_ && opt_.args.size() > n) throw UsageError("too many positional arguments");
  }

  Biword biword() const {
    expect_positionals(2);
    auto top = top_alphabet(), bottom = bottom_alphabet();
    if (doc_) return biword_from_json(top, bottom, *doc_);
    // no positionals: the empty biword
    if (opt_.args.empty()) return Biword(top, bottom);
    return parse_biword_text(top, bottom, positional(0, "top row"), positional(1, "bottom row"));
  }
  Word word(std::size_t k, const std::string& key) const {
    auto a = alphabet();
    if (doc_) return word_from_json(a, field(key));
    return Word::parse(a, k < opt_.args.size() ? opt_.args[k] : std::string());
  }
  Tableau tableau(const SignedAlphabet& a, std::size_t k, const std::string& key) const {
    auto t = doc_ ? tableau_from_json(a, field(key)) : parse_tableau_text(a, positional(k, key));
    require_valid(t);
    return t;
  }
  SkewTableau skew(const SignedAlphabet& a, std::size_t k, const std::string& key) const {
    auto t = doc_ ? skew_from_json(a, field(key)) : parse_skew_text(a, positional(k, key));
    require_valid(t);
    return t;
  }
  Partition partition(const std::string& key, const std::string& flag_value) const {
    if (doc_ && doc_->contains(key)) return Partition(field(key).get<std::vector<int>>());
    return partition_arg(key, flag_value);
  }
  SkewShape skew_shape(const std::string& flag_value) const {
    if (doc_ && doc_->contains("shape")) {
      const auto& s = field("shape");
      if (s.is_string()) return SkewShape::parse(s.get<std::string>());
      auto outer = Partition(s.at("outer").get<std::vector<int>>());
      auto inner = s.contains("inner") ? Partition(s.at("inner").get<std::vector<int>>()) : Partition{};
      return SkewShape(outer, inner);
    }
    std::string text = flag_value.empty() && !opt_.args.empty() ? opt_.args[0] : flag_value;
    if (text.empty()) throw UsageError("a shape is required (--shape nu/lambda)");
    return SkewShape::parse(text);
  }

 private:
  const Options& opt_;
  std::optional<json> doc_;
};

inline void emit(const Options& o, std::ostream& out, const json& j, const std::string& text) {
  if (o.json) out << j.dump(2) << "\n";
  else out << text;
}

inline int cmd_rsk(const Options& o, const Input& in, std::ostream& out) {
  auto w = in.biword();
  if (o.trace) {
    auto steps = rsk_steps(w);
    json j = json::array();
    std::string text;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      j.push_back(to_json(steps[i]));
      text += "step " + std::to_string(i) + "\n" + pair_text(steps[i]);
    }
    emit(o, out, {{"steps", j}, {"result", to_json(steps.back())}}, text);
    return 0;
  }
  auto p = rsk(w);
  emit(o, out, to_json(p), pair_text(p));
  return 0;
}

inline int cmd_rsk_dual(const Options& o, const Input& in, std::ostream& out) {
  auto w = in.biword();
  auto steps = rsk_dual_steps(w);
  if (o.trace) {
    json j = json::array();
    std::string text;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      j.push_back(to_json(steps[i]));
      text += "step " + std::to_string(i) + "\n" + pair_text(steps[i]);
    }
    emit(o, out, {{"steps", j}, {"result", to_json(steps.back())}}, text);
    return 0;
  }
  emit(o, out, to_json(steps.back()), pair_text(steps.back()));
  return 0;
}

inline int cmd_rsk_inverse(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(2);
  auto top = in.top_alphabet(), bottom = in.bottom_alphabet();
  auto t = in.tableau(bottom, 0, "insertion");
  auto q = in.tableau(top, 1, "recording");
  auto w = rsk_inverse({t, q});
  emit(o, out, to_json(w), render(w));
  return 0;
}

inline int cmd_biword_invert(const Options& o, const Input& in, std::ostream& out) {
  auto w = invert_biword(in.biword());
  emit(o, out, to_json(w), render(w));
  return 0;
}

inline int cmd_rs(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(1);
  auto p = rs(in.word(0, "word"));
  emit(o, out, to_json(p), pair_text(p));
  return 0;
}

inline int cmd_insert(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(2);
  auto a = in.alphabet();
  Tableau t = in.from_json() ? (in.doc().contains("tableau") ? in.tableau(a, 0, "tableau") : Tableau(a))
                             : (o.args.empty() || o.args[0] == "-" ? Tableau(a) : in.tableau(a, 0, "tableau"));
  auto w = in.word(1, "word");
  json boxes = json::array();
  std::string text;
  if (o.left) {
    for (std::size_t i = w.size(); i-- > 0;) {
      auto r = left_insert(w[i], t);
      boxes.push_back({r.new_box.row, r.new_box.col});
      if (o.trace) text += a.name(w[i]) + " -> (" + std::to_string(r.new_box.row) + "," + std::to_string(r.new_box.col) + ")\n";
      t = r.result;
    }
  } else {
    for (Letter x : w) {
      auto r = right_insert(t, x);
      boxes.push_back({r.new_box.row, r.new_box.col});
      if (o.trace) text += a.name(x) + " -> (" + std::to_string(r.new_box.row) + "," + std::to_string(r.new_box.col) + ")\n";
      t = r.result;
    }
  }
  json j = {{"tableau", to_json(t)}};
  if (o.trace) j["new_boxes"] = boxes;
  emit(o, out, j, text + tableau_text(t));
  return 0;
}

inline int cmd_rectify(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(1);
  auto s = in.skew(in.alphabet(), 0, "skew");
  std::vector<SlidePath> trace;
  auto t = rectify(s, o.trace ? &trace : nullptr);
  json j = {{"tableau", to_json(t)}};
  std::string text;
  if (o.trace) {
    j["slides"] = json::array();
    for (const auto& p : trace) {
      j["slides"].push_back(to_json(p));
      text += path_text(p) + "\n";
    }
  }
  emit(o, out, j, text + tableau_text(t));
  return 0;
}

inline int cmd_evacuate(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(1);
  auto t = in.tableau(in.alphabet(), 0, "tableau");
  auto e = evacuate(t);
  emit(o, out, {{"tableau", to_json(e)}, {"alphabet", e.alphabet().to_string()}}, tableau_text(e));
  return 0;
}

inline int cmd_skew_product(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(2);
  auto a = in.alphabet();
  auto s = in.skew(a, 0, "left"), s2 = in.skew(a, 1, "right");
  std::vector<SlidePath> trace;
  auto t = skew_product_by_taquin(s, s2, o.trace ? &trace : nullptr);
  json j = {{"tableau", to_json(t)}};
  std::string text;
  if (o.trace) {
    auto c = concat(s, s2);
    j["concatenation"] = to_json(c);
    text += skew_text(c) + "--\n";
    j["slides"] = json::array();
    for (const auto& p : trace) j["slides"].push_back(to_json(p));
  }
  emit(o, out, j, text + tableau_text(t));
  return 0;
}

inline int cmd_matrix_ball(const Options& o, const Input& in, std::ostream& out) {
  auto w = in.biword();
  auto b = build_ball_array(w);
  auto p = tableaux_of(b);
  json j = to_json(b);
  j["tableaux"] = to_json(p);
  emit(o, out, j, render(b) + pair_text(p));
  return 0;
}

inline int cmd_lr(const Options& o, const Input& in, std::ostream& out) {
  auto a = in.alphabet();
  LRQuery q{in.partition("lambda", o.lambda), in.partition("mu", o.mu), in.partition("nu", o.nu), a};
  std::string method = in.from_json() && in.doc().contains("method") ? in.field("method").get<std::string>() : o.method;
  std::vector<LRMethod> methods;
  if (method == "all") {
    methods = {LRMethod::product, LRMethod::skew_rect};
    if (a.is_standard() && fits_hook(q.mu, require_standard(a).first, require_standard(a).second))
      methods.push_back(LRMethod::yamanouchi);
  } else if (method == "product") methods = {LRMethod::product};
  else if (method == "skew") methods = {LRMethod::skew_rect};
  else if (method == "yamanouchi") methods = {LRMethod::yamanouchi};
  else throw UsageError("unknown method '" + method + "' (product, skew, yamanouchi, all)");

  json j = {{"lambda", partition_json(q.lambda)}, {"mu", partition_json(q.mu)}, {"nu", partition_json(q.nu)},
            {"alphabet", a.to_string()}, {"results", json::array()}};
  std::string text;
  for (auto m : methods) {
    LRResult r = m == LRMethod::product ? lr_product(q, o.witnesses)
                 : m == LRMethod::skew_rect ? lr_skew_rect(q, o.witnesses)
                                            : lr_yamanouchi(q, o.witnesses);
    json jr = {{"method", method_name(m)}, {"coefficient", r.coefficient}};
    text += std::string(method_name(m)) + ": " + std::to_string(r.coefficient) + "\n";
    if (r.witness) jr["witness"] = to_json(*r.witness);
    if (m != LRMethod::yamanouchi && !r.witness) {
      jr["note"] = "no tableau of the witness shape over this alphabet";
      text += "  (no tableau of the witness shape over this alphabet)\n";
    }
    if (o.witnesses) {
      jr["factor_pairs"] = json::array();
      for (const auto& [l, rr] : r.factor_pairs) {
        jr["factor_pairs"].push_back({to_json(l), to_json(rr)});
        text += render(l) + "*\n" + render(rr) + "\n";
      }
      jr["skew_tableaux"] = json::array();
      for (const auto& s : r.skew_tableaux) {
        jr["skew_tableaux"].push_back(to_json(s));
        text += skew_text(s) + "\n";
      }
    }
    j["results"].push_back(jr);
  }
  emit(o, out, j, text);
  return 0;
}

inline int cmd_schur_expand(const Options& o, const Input& in, std::ostream& out) {
  auto shape = in.skew_shape(o.shape);
  auto a = in.alphabet();
  auto e = schur_expand(shape, a);
  json terms = json::array();
  std::string text;
  for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it) {
    terms.push_back({{"shape", partition_json(it->first)}, {"coefficient", it->second}});
    text += std::to_string(it->second) + " S(" + it->first.to_string() + ")\n";
  }
  text += "fillings: " + std::to_string(e.fillings) + "\n";
  if (!e.consistent) text += "inconsistent: " + e.problem + "\n";
  emit(o, out,
       {{"shape", shape.to_string()}, {"terms", terms}, {"fillings", e.fillings}, {"consistent", e.consistent}},
       text);
  return e.consistent ? 0 : 1;
}

inline int cmd_yamanouchi(const Options& o, const Input& in, std::ostream& out) {
  in.expect_positionals(1);
  auto w = in.word(0, "word");
  bool y = is_super_yamanouchi(w);
  emit(o, out, {{"word", to_json(w)}, {"yamanouchi", y}}, y ? "true\n" : "false\n");
  return 0;
}

// LR ring identity for --lambda/--mu, or randomized RSK checks otherwise.
inline int cmd_verify(const Options& o, const Input& in, std::ostream& out) {
  auto a = in.alphabet();
  bool lr = !o.lambda.empty() || (in.from_json() && in.doc().contains("lambda"));
  if (lr) {
    auto rep = verify_lr_identity(in.partition("lambda", o.lambda), in.partition("mu", o.mu), a);
    json coeffs = json::array();
    std::string text;
    for (auto it = rep.coefficients.rbegin(); it != rep.coefficients.rend(); ++it) {
      coeffs.push_back({{"nu", partition_json(it->first)}, {"coefficient", it->second}});
      text += std::to_string(it->second) + " S(" + it->first.to_string() + ")\n";
    }
    text += std::string("product identity: ") + (rep.product_identity ? "holds" : "fails") + "\n";
    text += std::string("skew identity: ") + (rep.skew_identity ? "holds" : "fails") + " (" +
            std::to_string(rep.skew_shapes_checked) + " shapes, " + std::to_string(rep.skew_shapes_skipped) +
            " skipped)\n";
    if (!rep.first_discrepancy.empty()) text += "first discrepancy: " + rep.first_discrepancy + "\n";
    emit(o, out,
         {{"coefficients", coeffs},
          {"product_identity", rep.product_identity},
          {"skew_identity", rep.skew_identity},
          {"skew_shapes_checked", rep.skew_shapes_checked},
          {"skew_shapes_skipped", rep.skew_shapes_skipped},
          {"first_discrepancy", rep.first_discrepancy}},
         text);
    return rep.holds() ? 0 : 1;
  }

  // random biwords over the given alphabets
  auto top = in.top_alphabet(), bottom = in.bottom_alphabet();
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  int fails = 0;
  for (int i = 0; i < o.count; ++i) {
    std::vector<BiLetter> pairs;
    Biword probe(top, bottom);
    auto n = len(rng);
    for (std::size_t k = 0; k < n; ++k) {
      BiLetter c{Letter{static_cast<std::uint16_t>(rng() % top.size())},
                 Letter{static_cast<std::uint16_t>(rng() % bottom.size())}};
      bool dup = false;
      for (auto p : pairs) dup |= p == c && probe.signature(c) == 1;
      if (!dup) pairs.push_back(c);
    }
    auto w = sort_into_biword(top, bottom, pairs);
    auto p = rsk(w);
    bool ok = rsk_inverse(p) == w && rsk(invert_biword(w)) == swap(p) && tableaux_of(build_ball_array(w)) == p &&
              rsk_dual(w) == p;
    if (!ok) ++fails;
  }
  emit(o, out, {{"seed", o.seed}, {"count", o.count}, {"failures", fails}},
       "checked " + std::to_string(o.count) + " random biwords (seed " + std::to_string(o.seed) + "): " +
           std::to_string(fails) + " failures\n");
  return fails == 0 ? 0 : 1;
}

}  // namespace detail

// Exit status: 0 success, 1 domain error or failed check, 2 usage error.
inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Super RSK, jeu de taquin and Littlewood-Richardson tools over signed alphabets", "superrsk"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto common = [&](CLI::App* c, bool biword) {
    c->add_option("--alphabet,-a", o.alphabet, "Signed alphabet: std:m,n or name:bit,... (default std:1,1)");
    if (biword) c->add_option("--bottom-alphabet,-b", o.bottom_alphabet, "Alphabet of the bottom row (default: --alphabet)");
    c->add_flag("--json", o.json, "Write JSON instead of text");
    c->add_option("--input-json", o.input_json, "Read the input from a JSON document ('-' for stdin)");
  };
  struct Sub {
    const char* name;
    const char* help;
    const char* args;
    bool biword;
  };
  const std::vector<Sub> subs = {
      {"rsk", "Super RSK of a two-rowed array", "TOP BOTTOM", true},
      {"rsk-inverse", "Two-rowed array of a tableau pair", "T Q", true},
      {"rsk-dual", "Super RSK computed by left insertion", "TOP BOTTOM", true},
      {"rs", "Insertion and standard recording tableau of a word", "WORD", false},
      {"biword-invert", "Exchange and re-sort the rows of a two-rowed array", "TOP BOTTOM", true},
      {"insert", "Insert a word into a tableau ('-' for the empty tableau)", "TABLEAU WORD", false},
      {"rectify", "Rectify a skew tableau by jeu de taquin", "SKEW", false},
      {"evacuate", "Evacuation; the result is over the opposite alphabet", "TABLEAU", false},
      {"skew-product", "Rectification of the concatenation [S, S']", "S S2", false},
      {"matrix-ball", "Ball array of a two-rowed array and its tableaux", "TOP BOTTOM", true},
      {"lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}", "", false},
      {"schur-expand", "Expand a skew Schur function over straight shapes", "SHAPE", false},
      {"yamanouchi", "Test the super Yamanouchi condition", "WORD", false},
      {"verify", "Check the LR ring identity, or RSK on random arrays", "", true},
  };
  std::map<std::string, CLI::App*> cmds;
  for (const auto& s : subs) {
    auto* c = app.add_subcommand(s.name, s.help);
    common(c, s.biword);
    if (*s.args) c->add_option("args", o.args, s.args);
    cmds[s.name] = c;
  }
  cmds["rsk"]->add_flag("--trace", o.trace, "Print every intermediate pair");
  cmds["rsk-dual"]->add_flag("--trace", o.trace, "Print every intermediate pair");
  cmds["insert"]->add_flag("--trace", o.trace, "Print the new box of each insertion");
  cmds["insert"]->add_flag("--left", o.left, "Left insertion, last letter first");
  cmds["rectify"]->add_flag("--trace", o.trace, "Print each slide path");
  cmds["skew-product"]->add_flag("--trace", o.trace, "Print the concatenation and slide paths");
  for (const char* name : {"lr", "verify"}) {
    cmds[name]->add_option("--lambda", o.lambda, "Partition, e.g. 3,3,1");
    cmds[name]->add_option("--mu", o.mu, "Partition");
  }
  cmds["lr"]->add_option("--nu", o.nu, "Partition");
  cmds["lr"]->add_option("--method", o.method, "product, skew, yamanouchi or all")
      ->check(CLI::IsMember({"product", "skew", "yamanouchi", "all"}));
  cmds["lr"]->add_flag("--witnesses", o.witnesses, "List the factor pairs or skew tableaux counted");
  cmds["schur-expand"]->add_option("--shape", o.shape, "Skew shape nu/lambda, e.g. 5,4,3,2/3,3,1");
  cmds["verify"]->add_option("--seed", o.seed, "Seed for the random arrays");
  cmds["verify"]->add_option("--count", o.count, "Number of random arrays")->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string name;
  for (const auto& [k, c] : cmds)
    if (c->parsed()) name = k;

  try {
    detail::Input input(o, in);
    if (name == "rsk") return detail::cmd_rsk(o, input, out);
    if (name == "rsk-inverse") return detail::cmd_rsk_inverse(o, input, out);
    if (name == "rsk-dual") return detail::cmd_rsk_dual(o, input, out);
    if (name == "rs") return detail::cmd_rs(o, input, out);
    if (name == "biword-invert") return detail::cmd_biword_invert(o, input, out);
    if (name == "insert") return detail::cmd_insert(o, input, out);
    if (name == "rectify") return detail::cmd_rectify(o, input, out);
    if (name == "evacuate") return detail::cmd_evacuate(o, input, out);
    if (name == "skew-product") return detail::cmd_skew_product(o, input, out);
    if (name == "matrix-ball") return detail::cmd_matrix_ball(o, input, out);
    if (name == "lr") return detail::cmd_lr(o, input, out);
    if (name == "schur-expand") return detail::cmd_schur_expand(o, input, out);
    if (name == "yamanouchi") return detail::cmd_yamanouchi(o, input, out);
    if (name == "verify") return detail::cmd_verify(o, input, out);
    err << "superrsk: unknown subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "superrsk: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "superrsk: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const BiwordError& e) {
    err << "superrsk: invalid two-rowed array at column " << e.column() << ": " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "superrsk: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace superrsk::cli
