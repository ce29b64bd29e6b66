// hilb: command-line front end over the hilbplane C API. Every subcommand
// assembles a JSON request, calls hilb_eval, and prints the JSON response on
// stdout; diagnostics and timings go to stderr. Exit codes: 0 success, 1
// domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbplane.h"

namespace {

using Json = nlohmann::ordered_json;

int g_status = 0;

/// Runs one library command; prints the response or the error message.
void run(const std::string& command, const Json& request) {
  char* out = nullptr;
  int rc = hilb_eval(command.c_str(), request.dump().c_str(), &out);
  if (rc != HILB_OK) {
    std::cerr << "error: " << hilb_last_error() << "\n";
    g_status = rc;
    return;
  }
  std::cout << out << "\n";
  hilb_string_free(out);
  g_status = 0;
}

/// Like run, but strips the timing fields from the report so identical
/// inputs print identical bytes; the timings go to stderr instead.
void run_verify(const Json& request) {
  char* out = nullptr;
  int rc = hilb_eval("verify", request.dump().c_str(), &out);
  if (rc != HILB_OK) {
    std::cerr << "error: " << hilb_last_error() << "\n";
    g_status = rc;
    return;
  }
  Json report = Json::parse(std::string(out));
  hilb_string_free(out);

  std::ostringstream timing;
  timing << std::fixed << std::setprecision(1);
  timing << "suite " << report.at("suite").get<std::string>() << ": "
         << (report.at("pass").get<bool>() ? "pass" : "FAIL") << " in "
         << report.at("millis").get<double>() << " ms\n";
  for (auto& item : report.at("items")) {
    timing << "  " << item.at("name").get<std::string>() << ": "
           << item.at("millis").get<double>() << " ms\n";
    item.erase("millis");
  }
  report.erase("millis");
  std::cerr << timing.str();
  std::cout << report.dump() << "\n";
  g_status = report.at("pass").get<bool>() ? 0 : 1;
}

/// Accepts inline JSON (leading '{' or '[') or a path to a JSON file.
Json load_json(const std::string& arg) {
  std::string text = arg;
  size_t first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos ||
      (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("input", "cannot open file: " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return Json::parse(text);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.find_first_not_of(" \t") != std::string::npos)
      out.push_back(piece);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Json ideal_request(int order, const std::string& gens) {
  Json out;
  out["N"] = order;
  out["generators"] = split_commas(gens);
  return out;
}

std::uint64_t default_seed_from_env() {
  const char* env = std::getenv("HILB_SEED");
  if (!env || !*env) return 0;
  try {
    size_t used = 0;
    std::uint64_t seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    throw CLI::ValidationError("HILB_SEED",
                               "must be an unsigned integer, got: " +
                                   std::string(env));
  }
}

struct RingArgs {
  int order = 0;
  std::string f, g;
  std::string a = "1", b = "0", c = "0", d = "1";
};

struct IdealArgs {
  int order = 0;
  std::string gens, other;
  std::string a = "1", b = "0", c = "0", d = "1";
  std::string partition;
  int colength = 0;
  int smaller = 0;
};

struct BetaArgs {
  int n = 0;
  int order = 0; // 0 = default n+1
  std::string eta, f, g;
  std::string t = "1", s = "0";
  std::string samples;
};

struct ConeArgs {
  int n = 0;
  std::string divisor, curve;
};

struct SchemeArgs {
  std::string input;
  std::string line;
  std::string points;
  int m = 0;
  bool has_m = false;
};

struct BinformArgs {
  int n = 0;
  bool has_n = false;
  std::string F, G, line;
  std::string lambda = "1", mu = "0";
};

struct VerifyArgs {
  std::string suite;
  int n = 0;
  bool has_n = false;
  int trials = 0;
  bool has_trials = false;
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool list = false;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on ideals of plane points, pencils of "
               "ideals, and divisor classes on the Hilbert scheme"};
  app.set_version_flag("--version", hilb_version());
  app.require_subcommand(1);

  // ---- ring ------------------------------------------------------------
  auto* ring = app.add_subcommand("ring", "truncated local ring arithmetic");
  ring->require_subcommand(1);
  {
    auto args = std::make_shared<RingArgs>();
    auto* info = ring->add_subcommand("info", "context order, dimension, basis");
    info->add_option("--N", args->order, "context order")->required();
    info->callback([args] { run("ring.info", {{"N", args->order}}); });

    auto* mul = ring->add_subcommand("multiply", "product of two elements");
    mul->add_option("--N", args->order, "context order")->required();
    mul->add_option("--f", args->f, "first factor")->required();
    mul->add_option("--g", args->g, "second factor")->required();
    mul->callback([args] {
      run("ring.multiply",
          {{"N", args->order}, {"f", args->f}, {"g", args->g}});
    });

    auto* sub = ring->add_subcommand(
        "substitute", "apply u -> a*u + b*v, v -> c*u + d*v");
    sub->add_option("--N", args->order, "context order")->required();
    sub->add_option("--f", args->f, "element")->required();
    sub->add_option("--a", args->a, "coefficient of u in the image of u");
    sub->add_option("--b", args->b, "coefficient of v in the image of u");
    sub->add_option("--c", args->c, "coefficient of u in the image of v");
    sub->add_option("--d", args->d, "coefficient of v in the image of v");
    sub->callback([args] {
      run("ring.substitute",
          {{"N", args->order},
           {"f", args->f},
           {"subst",
            {{"a", args->a}, {"b", args->b}, {"c", args->c}, {"d", args->d}}}});
    });
  }

  // ---- ideal -----------------------------------------------------------
  auto* ideal = app.add_subcommand("ideal", "ideals in a truncated context");
  ideal->require_subcommand(1);
  {
    auto args = std::make_shared<IdealArgs>();
    auto add_gens = [&](CLI::App* cmd) {
      cmd->add_option("--N", args->order, "context order")->required();
      cmd->add_option("--gens", args->gens,
                      "comma-separated generators in u, v");
    };

    auto* colength = ideal->add_subcommand("colength", "length of the quotient");
    add_gens(colength);
    colength->callback([args] {
      run("ideal.colength", ideal_request(args->order, args->gens));
    });

    auto* info = ideal->add_subcommand("info", "canonical rows, colength, socle");
    add_gens(info);
    info->callback([args] {
      run("ideal.info", ideal_request(args->order, args->gens));
    });

    auto* socle = ideal->add_subcommand("socle", "socle of the quotient");
    add_gens(socle);
    socle->callback([args] {
      run("ideal.socle", ideal_request(args->order, args->gens));
    });

    auto* mingen =
        ideal->add_subcommand("min-generators", "minimal generator count");
    add_gens(mingen);
    mingen->callback([args] {
      run("ideal.min-generators", ideal_request(args->order, args->gens));
    });

    auto add_pair = [&](CLI::App* cmd) {
      cmd->add_option("--N", args->order, "context order")->required();
      cmd->add_option("--a", args->gens, "generators of the first ideal")
          ->required();
      cmd->add_option("--b", args->other, "generators of the second ideal")
          ->required();
    };
    auto pair_request = [args] {
      Json out;
      out["a"] = ideal_request(args->order, args->gens);
      out["b"] = ideal_request(args->order, args->other);
      return out;
    };

    auto* inter = ideal->add_subcommand("intersect", "intersection of two ideals");
    add_pair(inter);
    inter->callback([=] { run("ideal.intersect", pair_request()); });

    auto* sum = ideal->add_subcommand("sum", "sum of two ideals");
    add_pair(sum);
    sum->callback([=] { run("ideal.sum", pair_request()); });

    auto* contains =
        ideal->add_subcommand("contains", "does the first contain the second");
    add_pair(contains);
    contains->callback([=] { run("ideal.contains", pair_request()); });

    auto* equals = ideal->add_subcommand("equals", "are the two ideals equal");
    add_pair(equals);
    equals->callback([=] { run("ideal.equals", pair_request()); });

    auto* subst = ideal->add_subcommand(
        "substitute", "image under u -> a*u + b*v, v -> c*u + d*v");
    subst->add_option("--N", args->order, "context order")->required();
    subst->add_option("--gens", args->gens, "generators")->required();
    subst->add_option("--a", args->a, "coefficient of u in the image of u");
    subst->add_option("--b", args->b, "coefficient of v in the image of u");
    subst->add_option("--c", args->c, "coefficient of u in the image of v");
    subst->add_option("--d", args->d, "coefficient of v in the image of v");
    subst->callback([args] {
      run("ideal.substitute",
          {{"ideal", ideal_request(args->order, args->gens)},
           {"subst",
            {{"a", args->a}, {"b", args->b}, {"c", args->c}, {"d", args->d}}}});
    });

    auto* restrict_cmd =
        ideal->add_subcommand("restrict", "image in a smaller context");
    restrict_cmd->add_option("--N", args->order, "context order")->required();
    restrict_cmd->add_option("--gens", args->gens, "generators")->required();
    restrict_cmd->add_option("--order", args->smaller, "target order")
        ->required();
    restrict_cmd->callback([args] {
      run("ideal.restrict",
          {{"ideal", ideal_request(args->order, args->gens)},
           {"order", args->smaller}});
    });

    auto* theta = ideal->add_subcommand("theta", "square of the maximal ideal");
    theta->add_option("--N", args->order, "context order (>= 3)")->required();
    theta->callback([args] { run("ideal.theta", {{"N", args->order}}); });

    auto* monomial =
        ideal->add_subcommand("monomial", "monomial ideal of a staircase");
    monomial->add_option("--N", args->order, "context order")->required();
    monomial
        ->add_option("--partition", args->partition,
                     "comma-separated staircase row lengths")
        ->required();
    monomial->callback([args] {
      Json parts = Json::array();
      for (const auto& piece : split_commas(args->partition))
        parts.push_back(std::stoi(piece));
      run("ideal.monomial", {{"N", args->order}, {"partition", parts}});
    });

    auto* enumerate = ideal->add_subcommand(
        "enumerate", "all monomial ideals of a colength");
    enumerate->add_option("--N", args->order, "context order")->required();
    enumerate->add_option("--colength", args->colength, "colength")
        ->required();
    enumerate->callback([args] {
      run("ideal.enumerate",
          {{"N", args->order}, {"colength", args->colength}});
    });
  }

  // ---- pluecker ----------------------------------------------------------
  auto* pluecker =
      app.add_subcommand("pluecker", "minor coordinates of subspaces");
  pluecker->require_subcommand(1);
  {
    auto input = std::make_shared<std::string>();
    auto* coords = pluecker->add_subcommand(
        "coords", "minor coordinate vector of a row space");
    coords
        ->add_option("--input", *input,
                     "JSON {\"amb\", \"rows\"}, inline or a file path")
        ->required();
    coords->callback([input] { run("pluecker.coords", load_json(*input)); });

    auto* rec = pluecker->add_subcommand(
        "reconstruct", "row space from a minor coordinate vector");
    rec->add_option("--input", *input,
                    "JSON {\"k\", \"amb\", \"coords\"}, inline or a file path")
        ->required();
    rec->callback([input] { run("pluecker.reconstruct", load_json(*input)); });

    auto* fam = pluecker->add_subcommand(
        "line-family", "do the sample subspaces lie on one pencil");
    fam->add_option("--input", *input,
                    "JSON {\"amb\", \"samples\"}, inline or a file path")
        ->required();
    fam->callback([input] { run("pluecker.line-family", load_json(*input)); });
  }

  // ---- betacurve ---------------------------------------------------------
  auto* beta = app.add_subcommand("betacurve", "pencils of punctual ideals");
  beta->require_subcommand(1);
  {
    auto args = std::make_shared<BetaArgs>();
    auto add_pencil = [&](CLI::App* cmd) {
      cmd->add_option("--n", args->n, "colength of the members")->required();
      cmd->add_option("--N", args->order,
                      "context order (default n+1)");
      cmd->add_option("--eta", args->eta,
                      "generators of the base ideal, colength n+1")
          ->required();
      cmd->add_option("--f", args->f, "first socle element")->required();
      cmd->add_option("--g", args->g, "second socle element")->required();
    };
    auto pencil_request = [args] {
      int order = args->order > 0 ? args->order : args->n + 1;
      Json out;
      out["eta"] = ideal_request(order, args->eta);
      out["f"] = args->f;
      out["g"] = args->g;
      return out;
    };

    auto* build = beta->add_subcommand("build", "validate and build a pencil");
    add_pencil(build);
    build->callback([=] { run("betacurve.build", pencil_request()); });

    auto* member = beta->add_subcommand("member", "member ideal at (t : s)");
    add_pencil(member);
    member->add_option("--t", args->t, "first parameter coordinate");
    member->add_option("--s", args->s, "second parameter coordinate");
    member->callback([=] {
      Json request = pencil_request();
      request["t"] = args->t;
      request["s"] = args->s;
      run("betacurve.member", request);
    });

    auto* recognize = beta->add_subcommand(
        "recognize", "recover the pencil from member ideals");
    recognize
        ->add_option("--samples", args->samples,
                     "JSON {\"samples\": [ideal...]}, inline or a file path")
        ->required();
    recognize->callback(
        [args] { run("betacurve.recognize", load_json(args->samples)); });

    auto* decompose = beta->add_subcommand(
        "decompose", "split scheme samples into moving pencil and fixed part");
    decompose
        ->add_option("--samples", args->samples,
                     "JSON {\"samples\": [scheme...]}, inline or a file path")
        ->required();
    decompose->callback(
        [args] { run("betacurve.decompose", load_json(args->samples)); });

    auto* moduli = beta->add_subcommand("moduli", "family dimensions");
    moduli->add_option("--n", args->n, "member colength")->required();
    moduli->callback([args] { run("betacurve.moduli", {{"n", args->n}}); });
  }

  // ---- cone ----------------------------------------------------------------
  auto* cone = app.add_subcommand("cone", "divisor and curve class arithmetic");
  cone->require_subcommand(1);
  {
    auto args = std::make_shared<ConeArgs>();
    auto* pair = cone->add_subcommand("pair", "intersection number");
    pair->add_option("--n", args->n, "number of points")->required();
    pair->add_option("--divisor", args->divisor,
                     "divisor class, e.g. '3*D - 1/2*B'")
        ->required();
    pair->add_option("--curve", args->curve,
                     "curve class, e.g. 'bl - 3*bn'")
        ->required();
    pair->callback([args] {
      run("cone.pair", {{"n", args->n},
                        {"divisor", args->divisor},
                        {"curve", args->curve}});
    });

    auto* nef = cone->add_subcommand("nef", "is the divisor class nef");
    nef->add_option("--n", args->n, "number of points")->required();
    nef->add_option("--divisor", args->divisor, "divisor class")->required();
    nef->callback([args] {
      run("cone.nef", {{"n", args->n}, {"divisor", args->divisor}});
    });

    auto* eff =
        cone->add_subcommand("effective", "is the curve class effective");
    eff->add_option("--n", args->n, "number of points")->required();
    eff->add_option("--curve", args->curve, "curve class")->required();
    eff->callback([args] {
      run("cone.effective", {{"n", args->n}, {"curve", args->curve}});
    });

    auto* deg1 = cone->add_subcommand(
        "deg1", "integral effective classes of degree one");
    deg1->add_option("--n", args->n, "number of points")->required();
    deg1->callback([args] { run("cone.deg1", {{"n", args->n}}); });

    auto* gens = cone->add_subcommand("generators", "extremal generators");
    gens->add_option("--n", args->n, "number of points")->required();
    gens->callback([args] { run("cone.generators", {{"n", args->n}}); });

    auto* canonical = cone->add_subcommand("canonical", "canonical class");
    canonical->add_option("--n", args->n, "number of points")->required();
    canonical->callback([args] { run("cone.canonical", {{"n", args->n}}); });

    auto* moduli =
        cone->add_subcommand("moduli-line", "line-class family dimensions");
    moduli->add_option("--n", args->n, "number of points")->required();
    moduli->callback([args] { run("cone.moduli-line", {{"n", args->n}}); });
  }

  // ---- scheme ----------------------------------------------------------
  auto* scheme = app.add_subcommand("scheme", "pointed subschemes of the plane");
  scheme->require_subcommand(1);
  {
    auto args = std::make_shared<SchemeArgs>();
    auto* info = scheme->add_subcommand("info", "normalize and echo a scheme");
    info->add_option("--input", args->input,
                     "scheme JSON, inline or a file path")
        ->required();
    info->callback(
        [args] { run("scheme.info", {{"scheme", load_json(args->input)}}); });

    auto* reduced =
        scheme->add_subcommand("reduced", "reduced scheme on given points");
    reduced
        ->add_option("--points", args->points,
                     "semicolon-separated points 'x0,x1,x2;y0,y1,y2;...'")
        ->required();
    reduced->callback([args] {
      Json points = Json::array();
      size_t pos = 0;
      const std::string& text = args->points;
      while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string piece = text.substr(
            pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (piece.find_first_not_of(" \t") != std::string::npos) {
          Json triple = Json::array();
          for (const auto& coord : split_commas(piece))
            triple.push_back(coord);
          points.push_back(std::move(triple));
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
      run("scheme.reduced", {{"points", points}});
    });

    auto* collinear =
        scheme->add_subcommand("collinear", "line through the support, if any");
    collinear
        ->add_option("--input", args->input,
                     "scheme JSON, inline or a file path")
        ->required();
    collinear->callback([args] {
      run("scheme.collinear", {{"scheme", load_json(args->input)}});
    });

    auto* inline_cmd = scheme->add_subcommand(
        "in-line", "is the scheme contained in the line");
    inline_cmd
        ->add_option("--input", args->input,
                     "scheme JSON, inline or a file path")
        ->required();
    inline_cmd->add_option("--line", args->line, "degree-1 form in x0,x1,x2")
        ->required();
    inline_cmd->callback([args] {
      run("scheme.in-line",
          {{"scheme", load_json(args->input)}, {"line", args->line}});
    });
  }

  // ---- sections / maps ----------------------------------------------------
  {
    auto args = std::make_shared<SchemeArgs>();
    auto* h0 = app.add_subcommand(
        "h0", "sections of the ideal sheaf twisted by degree m");
    h0->add_option("--input", args->input, "scheme JSON, inline or a file path")
        ->required();
    h0->add_option("--m", args->m, "twist degree")->required();
    h0->callback([args] {
      run("h0", {{"scheme", load_json(args->input)}, {"m", args->m}});
    });

    auto args2 = std::make_shared<SchemeArgs>();
    auto* phi = app.add_subcommand(
        "phi", "sections map image with minor coordinates");
    phi->add_option("--input", args2->input,
                    "scheme JSON, inline or a file path")
        ->required();
    auto* mopt = phi->add_option("--m", args2->m,
                                 "twist degree (default: the length)");
    phi->callback([args2, mopt] {
      Json request = {{"scheme", load_json(args2->input)}};
      if (mopt->count() > 0) request["m"] = args2->m;
      run("phi", request);
    });

    auto args3 = std::make_shared<SchemeArgs>();
    auto* fiber = app.add_subcommand(
        "phi1", "fiber type of the degree-(n-1) sections map");
    fiber
        ->add_option("--input", args3->input,
                     "scheme JSON, inline or a file path")
        ->required();
    fiber->callback([args3] {
      run("phi1.fiber", {{"scheme", load_json(args3->input)}});
    });
  }

  // ---- kva ------------------------------------------------------------
  {
    auto a = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto* kva = app.add_subcommand(
        "kva", "k-very-ampleness test for O(a) (sufficient direction)");
    kva->add_option("--a", *a, "twist degree")->required();
    kva->add_option("--k", *k, "order of very-ampleness")->required();
    kva->callback([a, k] { run("kva", {{"a", *a}, {"k", *k}}); });
  }

  // ---- binform ----------------------------------------------------------
  auto* binform =
      app.add_subcommand("binform", "pencils of binary forms on a line");
  binform->require_subcommand(1);
  {
    auto args = std::make_shared<BinformArgs>();
    auto add_pencil = [&](CLI::App* cmd, bool with_n) {
      if (with_n)
        cmd->add_option("--n", args->n, "degree of the forms")
            ->each([args](const std::string&) { args->has_n = true; });
      cmd->add_option("--F", args->F, "first form in U, V")->required();
      cmd->add_option("--G", args->G, "second form in U, V")->required();
      cmd->add_option("--line", args->line, "degree-1 form in x0,x1,x2")
          ->required();
    };
    auto pencil_request = [args] {
      Json out;
      if (args->has_n) out["n"] = args->n;
      out["F"] = args->F;
      out["G"] = args->G;
      out["line"] = args->line;
      return out;
    };

    auto* cls = binform->add_subcommand(
        "class", "curve class and degree counts of the pencil");
    add_pencil(cls, true);
    cls->callback([=] { run("binform.class", pencil_request()); });

    auto* disc =
        binform->add_subcommand("disc", "discriminant of the pencil member");
    add_pencil(disc, false);
    disc->callback([=] { run("binform.disc", pencil_request()); });

    auto* embed = binform->add_subcommand(
        "embed", "member at (lambda : mu) as a subscheme of the plane");
    add_pencil(embed, false);
    embed->add_option("--lambda", args->lambda, "first parameter coordinate");
    embed->add_option("--mu", args->mu, "second parameter coordinate");
    embed->callback([=] {
      Json request = pencil_request();
      request["lambda"] = args->lambda;
      request["mu"] = args->mu;
      run("binform.embed", request);
    });

    auto* moduli = binform->add_subcommand("moduli", "family dimension");
    moduli->add_option("--n", args->n, "degree of the forms")->required();
    moduli->callback([args] { run("binform.moduli", {{"n", args->n}}); });
  }

  // ---- verify ----------------------------------------------------------
  {
    auto args = std::make_shared<VerifyArgs>();
    auto* verify =
        app.add_subcommand("verify", "run a named acceptance suite");
    verify->add_option("suite", args->suite, "suite name (see --list)");
    verify->add_flag("--list", args->list, "list the suite names");
    verify->add_option("--n", args->n, "restrict to one n")
        ->each([args](const std::string&) { args->has_n = true; });
    verify->add_option("--trials", args->trials, "randomized trial count")
        ->each([args](const std::string&) { args->has_trials = true; });
    verify->add_option("--seed", args->seed,
                       "seed for the randomized suites (default: HILB_SEED "
                       "or the built-in constant)")
        ->each([args](const std::string&) { args->has_seed = true; });
    verify->callback([args] {
      if (args->list) {
        run("verify.suites", Json::object());
        return;
      }
      if (args->suite.empty())
        throw CLI::RequiredError("suite (or --list)");
      Json request;
      request["suite"] = args->suite;
      if (args->has_n) request["n"] = args->n;
      if (args->has_trials) request["trials"] = args->trials;
      if (args->has_seed) {
        request["seed"] = args->seed;
      } else if (const char* env = std::getenv("HILB_SEED");
                 env && *env) {
        request["seed"] = default_seed_from_env();
      }
      run_verify(request);
    });
  }

  // ---- commands ----------------------------------------------------------
  {
    auto* commands = app.add_subcommand(
        "commands", "list the library command names");
    commands->callback([] {
      char* list = hilb_commands();
      if (list) {
        std::cout << list << "\n";
        hilb_string_free(list);
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_status;
}
