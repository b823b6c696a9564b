// scroll-acm: command-line front end for the scrollacm library.
//
// Exit codes: 0 success, 2 user error (bad arguments or input), 3 internal
// invariant violation.

#include "scrollacm/catalog.hpp"
#include "scrollacm/errors.hpp"
#include "scrollacm/json_io.hpp"
#include "scrollacm/mutation.hpp"
#include "scrollacm/random.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace scrollacm;

namespace {

constexpr int kExitUser = 2;
constexpr int kExitInternal = 3;

struct UserError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct VerificationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw UserError("malformed " + what + " '" + text + "'");
  }
  if (pos != text.size()) throw UserError("malformed " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

/// "a,b" in the S(a,b) notation.
Scroll parse_scroll(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UserError("--scroll expects a,b as in S(a,b), got '" + text + "'");
  const std::int64_t a = parse_int(parts[0], "scroll degree"), b = parse_int(parts[1], "scroll degree");
  if (a > b) throw UserError("--scroll a,b needs a <= b");
  return Scroll::from_degrees(a, b);
}

/// "H=1,F=-3"; missing coefficients are zero.
DivisorClass parse_divisor(const std::string& text) {
  DivisorClass d;
  bool seen_h = false, seen_f = false;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UserError("divisor terms look like H=<int> or F=<int>, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::int64_t v = parse_int(part.substr(eq + 1), "divisor coefficient");
    if (key == "H" && !seen_h) {
      d.alpha = v;
      seen_h = true;
    } else if (key == "F" && !seen_f) {
      d.beta = v;
      seen_f = true;
    } else {
      throw UserError("unexpected divisor term '" + part + "'");
    }
  }
  return d;
}

BraidWord parse_word(const std::string& text) {
  std::vector<std::int64_t> k;
  if (text.empty()) return BraidWord();
  for (const auto& part : split(text, ',')) k.push_back(parse_int(part, "braid word entry"));
  return BraidWord(k);
}

json read_json_source(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UserError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UserError("invalid JSON in '" + path + "': " + e.what());
  }
}

MatrixPencil read_pencil(const std::string& path) {
  try {
    return pencil_from_json(read_json_source(path));
  } catch (const json::exception& e) {
    throw UserError("malformed pencil file: " + std::string(e.what()));
  }
}

/// A line bundle "H=..,F=.." or a JSON character {"rank":..,"c1":{..},"ch2_times2":..}.
ChernCharacter parse_object(const Scroll& s, const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return character_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw UserError("malformed character JSON: " + std::string(e.what()));
    }
  }
  return ch_line(s, parse_divisor(text));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_int(const std::optional<Integer>& v) { return v ? v->get_str() : "-"; }

void print_descriptor_table(std::ostream& os, const std::vector<BundleDescriptor>& ds) {
  std::size_t wn = 6, wc = 4;
  for (const auto& d : ds) {
    wn = std::max(wn, d.name.size() + 2);
    wc = std::max(wc, d.c1().to_string().size() + 2);
  }
  os << std::left << std::setw(wn) << "name" << std::setw(24) << "tag" << std::setw(8) << "rank" << std::setw(wc)
     << "c1" << std::setw(12) << "slope" << std::setw(6) << "a" << std::setw(6) << "b" << std::setw(7) << "rigid"
     << "exceptional\n";
  for (const auto& d : ds) {
    os << std::setw(wn) << d.name << std::setw(24) << family_tag(d.family) << std::setw(8) << d.rank().get_str()
       << std::setw(wc) << d.c1().to_string() << std::setw(12) << to_string(d.slope) << std::setw(6) << opt_int(d.a)
       << std::setw(6) << opt_int(d.b) << std::setw(7) << yes_no(d.rigid) << yes_no(d.exceptional);
    if (d.point) os << "  at " << *d.point;
    if (d.extension)
      os << "  0->O(" << d.extension->sub.to_string() << ")->E->O(" << d.extension->quotient.to_string()
         << ")->0, h1(" << d.extension->certificate.to_string() << ")=" << d.extension->h1.get_str();
    os << "\n";
  }
}

void print_matrix(std::ostream& os, const std::string& label, const Matrix& m) {
  os << label << " (" << m.rows() << "x" << m.cols() << ")\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << " " << to_string(m(r, c));
    os << "\n";
  }
}

struct Options {
  std::string format = "table";
  std::string scroll;
  std::string divisor;
  std::string obj_e, obj_f;
  std::string word;
  std::string file;
  bool verify = false;
  std::size_t max_len = 1;
  std::int64_t max_abs_k = 3;
  std::string max_rank;
  std::int64_t w = 0, k = 0, upto = -1;
  std::int64_t a = 0, b = 0;
  std::size_t count = 100;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::function<void()>& table) {
  if (as_json(o)) std::cout << j.dump(2) << "\n";
  else table();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact numerics of ACM, Ulrich and rigid bundles on rational normal scrolls", "scroll-acm"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_scroll = [&](CLI::App* sub) {
    sub->add_option("--scroll", o.scroll, "Scroll S(a,b) given as a,b")->required();
  };
  std::function<int()> action;

  // cohom
  auto* cohom = app.add_subcommand("cohom", "Cohomology h0 h1 h2 of a line bundle");
  add_scroll(cohom);
  cohom->add_option("--div", o.divisor, "Divisor class, e.g. H=1,F=-3")->required()->allow_extra_args(false);
  add_format(cohom);
  cohom->callback([&] {
    action = [&] {
      const Scroll s = parse_scroll(o.scroll);
      const DivisorClass d = parse_divisor(o.divisor);
      const Cohomology c = cohomology(s, d);
      json j = to_json(c);
      j["scroll"] = to_json(s);
      j["divisor"] = to_json(d);
      emit(o, j, [&] { std::cout << c.h0 << " " << c.h1 << " " << c.h2 << "\nchi " << c.euler() << "\n"; });
      return 0;
    };
  });

  // euler
  auto* euler = app.add_subcommand("euler", "Euler pairing chi(E,F)");
  add_scroll(euler);
  euler->add_option("--e", o.obj_e, "First object: H=..,F=.. for a line bundle, or a character JSON")->required();
  euler->add_option("--f", o.obj_f, "Second object, same syntax")->required();
  add_format(euler);
  euler->callback([&] {
    action = [&] {
      const Scroll s = parse_scroll(o.scroll);
      const ChernCharacter e = parse_object(s, o.obj_e), f = parse_object(s, o.obj_f);
      const Integer chi = euler_pairing(s, e, f);
      json j = {{"scroll", to_json(s)}, {"e", to_json(e)}, {"f", to_json(f)}, {"chi", integer_json(chi)}};
      emit(o, j, [&] { std::cout << chi << "\n"; });
      return 0;
    };
  });

  // pencil decompose / fuzz
  auto* pencil = app.add_subcommand("pencil", "Kronecker-Weierstrass form of a matrix pencil");
  pencil->require_subcommand(1);
  auto* decompose = pencil->add_subcommand("decompose", "Decompose a pencil file");
  decompose->add_option("file", o.file, "Pencil JSON file ('-' for stdin)")->required();
  decompose->add_flag("--verify", o.verify, "Re-check P*M*Q against the canonical form");
  add_format(decompose);
  decompose->callback([&] {
    action = [&] {
      const MatrixPencil m = read_pencil(o.file);
      const KWDecomposition dec = kw_decompose(m);
      bool ok = true;
      if (o.verify) ok = verify_equivalence(dec, m);
      json j = to_json(dec);
      if (o.verify) j["verified"] = ok;
      emit(o, j, [&] {
        std::cout << "blocks:";
        for (const auto& b : dec.blocks) std::cout << " " << b.to_string();
        std::cout << "\n";
        print_matrix(std::cout, "P", dec.P);
        print_matrix(std::cout, "Q", dec.Q);
        if (o.verify) std::cout << "verified: " << yes_no(ok) << "\n";
      });
      if (!ok) throw VerificationFailure("decomposition failed verification");
      return 0;
    };
  });
  auto* fuzz = pencil->add_subcommand("fuzz", "Round-trip random block multisets (seed: SCROLL_ACM_SEED)");
  fuzz->add_option("--count", o.count, "Number of cases");
  add_format(fuzz);
  fuzz->callback([&] {
    action = [&] {
      const std::uint64_t seed = seed_from_env(20240601);
      std::mt19937_64 rng(seed);
      std::size_t recovered = 0, verified = 0;
      for (std::size_t i = 0; i < o.count; ++i) {
        const auto blocks = normalize_blocks(random_blocks(rng, {}));
        const MatrixPencil canon = kw_assemble(blocks);
        const MatrixPencil m = canon.transformed(random_unimodular(canon.rows(), rng), random_unimodular(canon.cols(), rng));
        const KWDecomposition dec = kw_decompose(m);
        recovered += dec.blocks == blocks;
        verified += verify_equivalence(dec, m);
      }
      json j = {{"seed", seed}, {"count", o.count}, {"recovered", recovered}, {"verified", verified}};
      emit(o, j, [&] {
        std::cout << "seed " << seed << ": " << recovered << "/" << o.count << " recovered, " << verified << "/"
                  << o.count << " verified\n";
      });
      if (recovered != o.count || verified != o.count) throw VerificationFailure("fuzz round-trip mismatch");
      return 0;
    };
  });

  // ulrich classify
  auto* ulrich = app.add_subcommand("ulrich", "Ulrich bundles on quartic scrolls");
  ulrich->require_subcommand(1);
  auto* classify = ulrich->add_subcommand("classify", "Split the Ulrich bundle of an extension pencil");
  add_scroll(classify);
  classify->add_option("file", o.file, "Pencil JSON file ('-' for stdin)")->required();
  add_format(classify);
  classify->callback([&] {
    action = [&] {
      const Scroll s = parse_scroll(o.scroll);
      const MatrixPencil m = read_pencil(o.file);
      const auto ds = classify_quartic_ulrich(s, m);
      const auto dec = kw_decompose(m);
      json j = {{"scroll", to_json(s)}, {"blocks", to_json(dec, false)["blocks"]}, {"summands", to_json(ds)}};
      emit(o, j, [&] { print_descriptor_table(std::cout, ds); });
      return 0;
    };
  });

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Indecomposable ACM types on a quartic scroll");
  add_scroll(catalog);
  add_format(catalog);
  catalog->callback([&] {
    action = [&] {
      const Scroll s = parse_scroll(o.scroll);
      const auto ds = quartic_acm_catalog(s);
      json j = {{"scroll", to_json(s)}, {"bundles", to_json(ds)}};
      emit(o, j, [&] { print_descriptor_table(std::cout, ds); });
      return 0;
    };
  });

  // kfrak check
  auto* kfrak = app.add_subcommand("kfrak", "Admissibility of a braid word");
  auto* kcheck = kfrak->add_subcommand("check", "Check the sign conditions")->fallthrough();
  add_scroll(kfrak);
  kfrak->add_option("--word", o.word, "Word k1,k2,... (use --word=-3,2 for a leading minus)")->required();
  add_format(kfrak);
  (void)kcheck;
  kfrak->callback([&] {
    action = [&] {
      const Scroll s = parse_scroll(o.scroll);
      const BraidWord k = parse_word(o.word);
      const auto r = kfrak_member(s, k);
      json j = {{"scroll", to_json(s)},
                {"word", to_json(k)},
                {"member", r.member},
                {"failing_t", r.failing_t ? json(*r.failing_t) : json(nullptr)}};
      emit(o, j, [&] {
        if (r.member) std::cout << "member\n";
        else std::cout << "non-member at t=" << *r.failing_t << "\n";
      });
      return 0;
    };
  });

  // rigid enum / bundle / h
  auto* rigid = app.add_subcommand("rigid", "Rigid ACM bundles from braid words");
  rigid->require_subcommand(1);
  auto* renum = rigid->add_subcommand("enum", "Enumerate admissible words");
  add_scroll(renum);
  renum->add_option("--max-len", o.max_len, "Maximum word length");
  renum->add_option("--max-abs-k", o.max_abs_k, "Bound on |k_t|");
  renum->add_option("--max-rank", o.max_rank, "Only report bundles up to this rank");
  add_format(renum);
  renum->callback([&] {
    action = [&] {
      const Scroll s = parse_scroll(o.scroll);
      EnumerationOptions opts;
      opts.max_len = o.max_len;
      opts.max_abs_k = o.max_abs_k;
      if (o.max_abs_k < 0) throw UserError("--max-abs-k must be nonnegative");
      if (!o.max_rank.empty()) opts.max_rank = Integer(parse_int(o.max_rank, "rank bound"));
      if (s.dX() == 4) {
        const std::string notice = "tame surface, use `ulrich` command";
        emit(o, {{"scroll", to_json(s)}, {"notice", notice}, {"bundles", json::array()}},
             [&] { std::cout << s.name() << ": " << notice << "\n"; });
        return 0;
      }
      if (s.dX() < 4) throw UserError(s.name() + " has degree " + std::to_string(s.dX()) + "; enumeration needs dX >= 5");
      const auto ds = enumerate_rigid(s, opts);
      emit(o, {{"scroll", to_json(s)}, {"bundles", to_json(ds)}}, [&] { print_descriptor_table(std::cout, ds); });
      return 0;
    };
  });
  for (const char* name : {"bundle", "h"}) {
    const bool is_h = std::string(name) == "h";
    auto* sub = rigid->add_subcommand(name, is_h ? "The bundle H_k" : "The bundle F_k");
    add_scroll(sub);
    sub->add_option("--word", o.word, "Word k1,k2,... (use --word=-3,2 for a leading minus)")->required();
    add_format(sub);
    sub->callback([&, is_h] {
      action = [&, is_h] {
        const Scroll s = parse_scroll(o.scroll);
        const BraidWord k = parse_word(o.word);
        const BundleDescriptor d = is_h ? h_bundle(s, k) : rigid_bundle(s, k);
        emit(o, to_json(d), [&] { print_descriptor_table(std::cout, {d}); });
        return 0;
      };
    });
  }

  // fib
  auto* fib = app.add_subcommand("fib", "Generalized Fibonacci numbers phi_{w,k}");
  fib->add_option("--w", o.w, "Arrow count w >= 2")->required();
  fib->add_option("--k", o.k, "Index k >= -1");
  fib->add_option("--upto", o.upto, "Print phi_{w,0..upto}");
  add_format(fib);
  fib->callback([&] {
    action = [&] {
      std::int64_t lo = o.k, hi = o.k;
      if (o.upto >= 0) lo = 0, hi = o.upto;
      json values = json::array();
      std::vector<Integer> row;
      for (std::int64_t k = lo; k <= hi; ++k) {
        row.push_back(fibonacci(o.w, k));
        values.push_back({{"k", k}, {"phi", integer_json(row.back())}});
      }
      emit(o, {{"w", o.w}, {"values", values}}, [&] {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
        std::cout << "\n";
      });
      return 0;
    };
  });

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "Quadratic form psi and the rigid dimension test");
  psi_cmd->add_option("--w", o.w, "Arrow count")->required();
  psi_cmd->add_option("--a", o.a, "Target dimension a")->required();
  psi_cmd->add_option("--b", o.b, "Source dimension b")->required();
  add_format(psi_cmd);
  psi_cmd->callback([&] {
    action = [&] {
      const Integer value = psi(o.w, o.a, o.b);
      std::optional<std::int64_t> k;
      if (o.a >= 0 && o.b >= 0 && (o.a != 0 || o.b != 0)) k = rigid_dimension_test(o.w, o.a, o.b);
      json j = {{"w", o.w}, {"a", o.a}, {"b", o.b}, {"psi", integer_json(value)}, {"k", k ? json(*k) : json(nullptr)}};
      emit(o, j, [&] {
        std::cout << "psi " << value << "\n";
        if (k) std::cout << "rigid: {a,b} = {phi_" << *k << ", phi_" << *k + 1 << "}\n";
        else std::cout << "not a real Schur root\n";
      });
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  }
  if (!action) {
    std::cerr << "error: no command given\n";
    return kExitUser;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const VerificationFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << (e.internal() ? "internal error: " : "error: ") << e.what() << "\n";
    return e.internal() ? kExitInternal : kExitUser;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
