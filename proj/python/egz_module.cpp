#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "egz/core.hpp"
#include "egz/generate.hpp"
#include "egz/modarith.hpp"
#include "egz/oracle.hpp"

namespace py = pybind11;

namespace {

std::vector<std::uint64_t> reduced(const std::vector<std::int64_t>& raw, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(raw.size());
  for (const std::int64_t x : raw) {
    out.push_back(egz::reduce(x, n).value);
  }
  return out;
}

std::vector<int> to_list(const egz::Selection& selection) {
  return {selection.mask.begin(), selection.mask.end()};
}

egz::Selection from_list(const std::vector<int>& mask) {
  egz::Selection selection;
  selection.mask.reserve(mask.size());
  for (const int bit : mask) {
    if (bit != 0 && bit != 1) {
      throw egz::ContractError("mask entries must be 0 or 1");
    }
    selection.mask.push_back(static_cast<std::uint8_t>(bit));
  }
  return selection;
}

}  // namespace

PYBIND11_MODULE(_egz, m) {
  m.doc() = "Zero-sum subsequence solver";
  m.attr("MAX_MODULUS") = egz::kMaxModulus;

  m.def("reduce", [](std::int64_t x, std::uint64_t m) { return egz::reduce(x, m).value; },
        py::arg("x"), py::arg("m"));
  m.def("mod_inverse", &egz::mod_inverse, py::arg("d"), py::arg("p"));
  m.def("smallest_prime_factor", &egz::smallest_prime_factor, py::arg("n"));

  m.def(
      "egz",
      [](std::uint64_t n, const std::vector<std::int64_t>& values) {
        py::gil_scoped_release release;
        return to_list(egz::egz(n, std::span<const std::int64_t>(values)));
      },
      py::arg("n"), py::arg("values"),
      "Return a 0/1 mask selecting n of the 2n-1 values with sum divisible by n.");
  m.def(
      "egz_prime",
      [](std::uint64_t p, const std::vector<std::int64_t>& values) {
        return to_list(egz::egz_prime(p, reduced(values, p)));
      },
      py::arg("p"), py::arg("values"));
  m.def(
      "egz_composite",
      [](std::uint64_t p, std::uint64_t q, const std::vector<std::int64_t>& values) {
        if (p < 2 || q < 2 || p > egz::kMaxModulus / q) {
          throw egz::ContractError("egz_composite: need p, q >= 2 and p*q <= 2^31 - 1");
        }
        return to_list(egz::egz_composite(p, q, reduced(values, p * q)));
      },
      py::arg("p"), py::arg("q"), py::arg("values"));
  m.def(
      "find_t",
      [](std::uint64_t p, const std::vector<std::uint64_t>& members, std::uint64_t d,
         std::uint64_t u, std::uint64_t v) {
        std::vector<std::uint8_t> table(p, 0);
        for (const std::uint64_t x : members) {
          if (x >= p) {
            throw egz::ContractError("find_t: member outside [0, p)");
          }
          table[x] = 1;
        }
        const auto found = egz::find_t(p, table, d, u, v);
        return py::make_tuple(found.t, found.probes);
      },
      py::arg("p"), py::arg("members"), py::arg("d"), py::arg("u"), py::arg("v"),
      "Return (t, probes) for a membership set given as a list of residues.");

  m.def(
      "check_selection",
      [](std::uint64_t n, const std::vector<std::int64_t>& values, const std::vector<int>& mask) {
        return egz::oracle::check_selection(n, values, from_list(mask));
      },
      py::arg("n"), py::arg("values"), py::arg("mask"));
  m.def(
      "solve_exhaustive",
      [](std::uint64_t n, const std::vector<std::int64_t>& values) -> std::optional<std::vector<int>> {
        const auto found = egz::oracle::solve_exhaustive(n, values);
        if (!found) {
          return std::nullopt;
        }
        return to_list(*found);
      },
      py::arg("n"), py::arg("values"));
  m.def(
      "solve_prime_quadratic",
      [](std::uint64_t p, const std::vector<std::int64_t>& values) {
        return to_list(egz::oracle::solve_prime_quadratic(p, values));
      },
      py::arg("p"), py::arg("values"));

  m.def(
      "generate",
      [](std::uint64_t n, std::uint64_t seed, const std::string& dist) {
        const auto distribution = egz::gen::parse_distribution(dist);
        if (!distribution) {
          throw egz::ContractError("unknown distribution '" + dist + "'");
        }
        return egz::gen::generate(n, seed, *distribution).values;
      },
      py::arg("n"), py::arg("seed"), py::arg("dist") = "uniform");
}
