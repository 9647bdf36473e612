#include "cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "trikernel/error.hpp"

namespace trikernel::cli {

namespace {

struct Options {
  FamilySource source;
  std::optional<long> n_max;
  std::string format = "pretty";
  std::string method;
  std::string from;
  std::string to;
  long n = 0;
  std::string poly;
};

void add_family_flags(CLI::App* cmd, Options& o) {
  auto* family = cmd->add_option("--family", o.source.family, "catalog family name");
  auto* spec = cmd->add_option("--spec", o.source.spec_path, "family spec file (JSON)");
  family->excludes(spec);
}

void add_format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
}

void add_n_max_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--n-max", o.n_max, "largest row index (default 10, or the table size)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular kernels of order m: direct and inverse tables, changes of basis, verification."};
  app.name("trikernel");
  app.require_subcommand(1);
  Options o;

  auto* direct = app.add_subcommand("direct", "direct kernel triangle lambda1");
  add_family_flags(direct, o);
  add_n_max_flag(direct, o);
  add_format_flag(direct, o);

  auto* inverse = app.add_subcommand("inverse", "inverse kernel triangle lambda3");
  add_family_flags(inverse, o);
  add_n_max_flag(inverse, o);
  add_format_flag(inverse, o);
  o.method = "orthogonality";
  inverse->add_option("--method", o.method, "orthogonality, determinant, recurrence or all")
      ->check(CLI::IsMember({"orthogonality", "determinant", "recurrence", "all"}));

  auto* change = app.add_subcommand("change", "connection coefficients z(n,k) between two families of equal order");
  change->add_option("--from", o.from, "family expanded (catalog name or spec path)")->required();
  change->add_option("--to", o.to, "target basis (catalog name or spec path)")->required();
  add_n_max_flag(change, o);
  add_format_flag(change, o);
  std::string change_method = "convolution";
  change->add_option("--method", change_method, "convolution or recurrence")
      ->check(CLI::IsMember({"convolution", "recurrence"}));

  auto* cross = app.add_subcommand("cross", "coefficients Z(n;r) between families of any orders");
  cross->add_option("--from", o.from, "family expanded (catalog name or spec path)")->required();
  cross->add_option("--to", o.to, "target basis (catalog name or spec path)")->required();
  cross->add_option("--n", o.n, "row index")->required();
  add_format_flag(cross, o);

  auto* expand = app.add_subcommand("expand", "coefficients of a polynomial in a family basis");
  expand->add_option("--poly", o.poly, "coefficients low to high degree, comma separated")->required();
  add_family_flags(expand, o);
  add_format_flag(expand, o);

  auto* verify = app.add_subcommand("verify", "run the identity checks for one family");
  add_family_flags(verify, o);
  add_n_max_flag(verify, o);
  add_format_flag(verify, o);

  auto* list = app.add_subcommand("list", "catalog families");
  add_format_flag(list, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Document doc;
    if (direct->parsed()) {
      doc = cmd_direct(resolve_family(o.source), o.n_max);
    } else if (inverse->parsed()) {
      doc = cmd_inverse(resolve_family(o.source), o.n_max, o.method);
    } else if (change->parsed()) {
      doc = cmd_change(resolve_name_or_path(o.from), resolve_name_or_path(o.to), o.n_max, change_method);
    } else if (cross->parsed()) {
      doc = cmd_cross(resolve_name_or_path(o.from), resolve_name_or_path(o.to), o.n);
    } else if (expand->parsed()) {
      doc = cmd_expand(resolve_family(o.source), o.poly);
    } else if (verify->parsed()) {
      doc = cmd_verify(resolve_family(o.source), o.n_max);
    } else {
      doc = cmd_list();
    }
    const Format format = parse_format(o.format);
    out << render(doc, format);
    if (format == Format::Csv) {
      for (const std::string& line : doc.report) err << line << '\n';
    }
    return doc.ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.n()) {
      err << " [n=" << *e.n();
      if (e.k()) err << ", k=" << *e.k();
      err << ']';
    }
    err << '\n';
    return e.code() == ErrorCode::Io ? 2 : 1;
  }
}

}  // namespace trikernel::cli
