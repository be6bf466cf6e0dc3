#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "holo/error.hpp"
#include "holo/hologram.hpp"

using namespace holo;

namespace {

GridSpec small_grid(std::size_t n = 5, double h = 20.0) { return GridSpec{make_frame({1, 0, 0}, 100.0), h, n}; }

}  // namespace

TEST_CASE("intensity and scattered signal") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const RadiationField f = RadiationField::make(3, {{1.0, {0, 0, 0}}});
  CHECK(std::abs(intensity(f, p, {100, 0, 0}) - 1.0201) < 1e-12);
  CHECK(std::abs(scattered_signal(f, p, {100, 0, 0}) - 2.01) < 1e-10);
  CHECK_THROWS_AS(scattered_signal(f, p, {0, 0, 0}), Error);
}

TEST_CASE("vanishing scattered field gives unit intensity") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const RadiationField f = RadiationField::make(3, {{0.0, {0, 2.5, 0}}});
  const Hologram holo = sample_hologram(f, p, small_grid(7));
  REQUIRE(holo.values.size() == 49);
  for (double v : holo.values) CHECK(std::abs(v - 1.0) < 1e-15);
}

TEST_CASE("sampling is independent of the thread count") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const RadiationField f = RadiationField::make(3, {{1.0, {0, 2.5, 0}}});
  const Hologram a = sample_hologram(f, p, small_grid(31), 1);
  const Hologram b = sample_hologram(f, p, small_grid(31), 4);
  CHECK(a.values == b.values);
  CHECK(a.at(3, 4) == intensity(f, p, grid_points(small_grid(31))[3 * 31 + 4].x));
}

TEST_CASE("sampling through a source names the node") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const RadiationField f = RadiationField::make(3, {{1.0, {100, 0, 0}}});
  try {
    sample_hologram(f, p, small_grid(5));
    FAIL("expected singular evaluation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularEvaluation);
    CHECK(std::string(e.what()).find("(2, 2)") != std::string::npos);
  }
}

TEST_CASE("bilinear lookup") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const RadiationField f = RadiationField::make(3, {{1.0, {0, 2.5, 0}}});
  const GridSpec spec = small_grid(21);
  const Hologram holo = sample_hologram(f, p, spec);
  const IntensityLookup lookup = IntensityLookup::bilinear(holo);
  CHECK(lookup.mode() == LookupMode::Bilinear);

  SUBCASE("exact at nodes") {
    for (const GridNode& node : grid_points(spec)) CHECK(lookup.intensity(node.x) == holo.at(node.i, node.j));
  }

  SUBCASE("reproduces constant and bilinear data") {
    Hologram lin{spec, p, std::vector<double>(spec.size())};
    Hologram cst{spec, p, std::vector<double>(spec.size(), 3.25)};
    for (const GridNode& node : grid_points(spec)) lin.values[node.i * spec.n + node.j] = 1.0 + 0.5 * node.u - 0.25 * node.v;
    const IntensityLookup l1 = IntensityLookup::bilinear(lin);
    const IntensityLookup l2 = IntensityLookup::bilinear(cst);
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int t = 0; t < 500; ++t) {
      const double a = u(gen);
      const double b = u(gen);
      const Vec y{100, a, b};
      CHECK(std::abs(l1.intensity(y) - (1.0 + 0.5 * a - 0.25 * b)) < 1e-12);
      CHECK(std::abs(l2.intensity(y) - 3.25) < 1e-14);
    }
  }

  SUBCASE("outside the patch") {
    try {
      lookup.intensity({100, 20.5, 0});
      FAIL("expected OutOfPatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutOfPatch);
    }
    CHECK_NOTHROW(lookup.intensity({100, 20, -20}));
  }
}

TEST_CASE("multiplicative noise") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const RadiationField f = RadiationField::make(3, {{1.0, {0, 2.5, 0}}});
  const Hologram holo = sample_hologram(f, p, small_grid(25));

  CHECK(add_noise(holo, 0.0, 9).values == holo.values);
  const Hologram a = add_noise(holo, 0.01, 42);
  const Hologram b = add_noise(holo, 0.01, 42);
  const Hologram c = add_noise(holo, 0.01, 43);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  for (std::size_t q = 0; q < holo.values.size(); ++q) {
    CHECK(a.values[q] >= 0.0);
    CHECK(std::abs(a.values[q] - holo.values[q]) <= 0.01 * holo.values[q] + 1e-15);
  }
  CHECK_THROWS_AS(add_noise(holo, -0.1, 1), Error);
}

TEST_CASE("hologram csv and pgm") {
  const WaveParams p = WaveParams::make(4, {4, 0, 0});
  const GridSpec spec = small_grid(2);
  Hologram holo{spec, p, {1.0, 2.0, 3.0, 5.0}};

  std::ostringstream csv;
  write_hologram_csv(csv, holo);
  CHECK(csv.str() == "i,j,x2,x3,I\n0,0,-20,-20,1\n0,1,-20,20,2\n1,0,20,-20,3\n1,1,20,20,5\n");

  std::ostringstream pgm;
  write_hologram_pgm(pgm, holo);
  const std::string bytes = pgm.str();
  const std::string header = "P5\n2 2\n255\n";
  REQUIRE(bytes.size() == header.size() + 4);
  CHECK(bytes.substr(0, header.size()) == header);
  // Top row is j = 1: values 2 and 5 -> 64 and 255; bottom row 1 and 3 -> 0 and 128.
  const auto px = [&](std::size_t q) { return static_cast<unsigned char>(bytes[header.size() + q]); };
  CHECK(px(0) == 64);
  CHECK(px(1) == 255);
  CHECK(px(2) == 0);
  CHECK(px(3) == 128);

  Hologram flat{spec, p, {2.0, 2.0, 2.0, 2.0}};
  std::ostringstream flat_pgm;
  write_hologram_pgm(flat_pgm, flat);
  CHECK(flat_pgm.str() == header + std::string(4, '\0'));

  const GridSpec line{make_frame({1, 0}, 10.0), 1.0, 3};
  Hologram planar{line, WaveParams::make(1, {1, 0}), {0.5, 1.0, 1.5}};
  std::ostringstream csv2;
  write_hologram_csv(csv2, planar);
  CHECK(csv2.str() == "i,x2,I\n0,-1,0.5\n1,0,1\n2,1,1.5\n");
}
