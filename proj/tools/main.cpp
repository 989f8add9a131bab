#include <iostream>
#include <string>
#include <vector>

#include <cmreg/cli.hpp>

namespace {

const char* kUsage = R"(usage: cmreg <command> [input.ideal|-] [flags]

commands
  hf             Hilbert function table, polynomial, agreement index
  series         Hilbert series N(t)/(1-t)^d, dimension, multiplicity
  reg            Castelnuovo-Mumford and geometric regularity of S/I
  gin            generic initial ideal (degrevlex)
  lex            lex-segment ideal with the same Hilbert function
  gotzmann       Gotzmann representation and regularity bound of p(n)
  sat            saturation of a monomial ideal
  bounds         bound polynomials and numeric bounds from --d/--e
  enumerate      census of Hilbert functions with g-reg <= m, embdim <= r
  check-mumford  numeric check of the hyperplane-section identities
  verify-paper   run every fixture in --fixtures and report

flags
  --order degrevlex|lex   term order (default degrevlex)
  --char N                override the coefficient characteristic
  --seed N                seed for randomized coordinate changes (default 0)
  --trials N              agreeing trials required by gin (default 3)
  --upto N                table/segment degree cutoff
  --json | --csv          output form (JSON default; csv for hf, enumerate)
  --r N --m N             enumerate parameters
  --d N --e N             bounds parameters
  --fixtures DIR          fixture directory for verify-paper (default fixtures)

input documents
  ring: x, y, z ; char 0
  gens: x^2, x*y - z^2
)";

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::cout << kUsage;
    return args.empty() ? 1 : 0;
  }
  return cmreg::cli::run_command(args, std::cin, std::cout, std::cerr);
}
