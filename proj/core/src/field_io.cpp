#include "ocmg/field_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ocmg {

void write_field(std::ostream &os, const ScalarField &f)
{
  const GridSpec &g = f.grid();
  os << "N " << g.N() << '\n';
  os << std::setprecision(17);
  for (int j = 1; j <= g.n(); ++j)
  {
    for (int i = 1; i <= g.n(); ++i)
    {
      os << i << ' ' << j << ' ' << f(i, j) << '\n';
    }
  }
}

void write_field(const std::string &path, const ScalarField &f)
{
  std::ofstream os(path);
  if (!os)
  {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_field(os, f);
  if (!os)
  {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

ScalarField read_field(std::istream &is)
{
  std::string tag;
  int N = 0;
  if (!(is >> tag >> N) || tag != "N" || N < 2)
  {
    throw std::runtime_error("field file: expected header 'N <value>' with N >= 2");
  }
  const GridSpec g(N);
  ScalarField f(g);
  for (int j = 1; j <= g.n(); ++j)
  {
    for (int i = 1; i <= g.n(); ++i)
    {
      int ii = 0;
      int jj = 0;
      double v = 0.0;
      if (!(is >> ii >> jj >> v))
      {
        throw std::runtime_error("field file: expected " + std::to_string(g.size()) +
                                 " entries, input ended early");
      }
      if (ii != i || jj != j)
      {
        throw std::runtime_error("field file: entry (" + std::to_string(ii) + "," +
                                 std::to_string(jj) + ") out of order, expected (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
      f(i, j) = v;
    }
  }
  return f;
}

ScalarField read_field(const std::string &path)
{
  std::ifstream is(path);
  if (!is)
  {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return read_field(is);
}

} // namespace ocmg
