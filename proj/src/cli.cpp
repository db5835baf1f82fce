// Copyright 2026 The fuzzyedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuzzyedge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "fuzzyedge/fuzzy.hpp"
#include "fuzzyedge/image_io.hpp"
#include "fuzzyedge/memristor.hpp"
#include "fuzzyedge/otsu.hpp"
#include "fuzzyedge/pipeline.hpp"
#include "fuzzyedge/sobel.hpp"
#include "fuzzyedge/stream_window.hpp"

namespace fuzzyedge {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadText(const std::string& path) {
  const Bytes bytes = read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

// Accepts "otsu" or an integer gray level.
ThresholdSource ParseThresholdSource(const std::string& text) {
  if (text == "otsu") return OtsuThreshold{};
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0 ||
      value > 255) {
    throw UsageError("threshold must be 'otsu' or an integer in [0,255], got '" +
                     text + "'");
  }
  return FixedThreshold{value};
}

// Where an image comes from: a PNM file or headerless text channels.
struct InputFlags {
  std::string pnm_path;
  std::string channel_path;
  std::string r_path, g_path, b_path;
  std::size_t width = 0;
  std::size_t height = 0;

  void Register(CLI::App* cmd, bool rgb_channels) {
    cmd->add_option("input", pnm_path, "PNM input (P2/P3/P5/P6)");
    if (rgb_channels) {
      cmd->add_option("--r", r_path, "R channel as a decimal text file");
      cmd->add_option("--g", g_path, "G channel as a decimal text file");
      cmd->add_option("--b", b_path, "B channel as a decimal text file");
    } else {
      cmd->add_option("--channel", channel_path,
                      "single channel as a decimal text file");
    }
    cmd->add_option("--width", width, "text channel width");
    cmd->add_option("--height", height, "text channel height");
  }

  bool FromText() const {
    return !channel_path.empty() || !r_path.empty() || !g_path.empty() ||
           !b_path.empty();
  }

  PnmImage Load() const {
    if (!pnm_path.empty() && FromText()) {
      throw UsageError("give either a PNM input or text channels, not both");
    }
    if (!FromText()) {
      if (pnm_path.empty()) throw UsageError("no input image given");
      return read_pnm(read_file(pnm_path));
    }
    if (width == 0 || height == 0) {
      throw UsageError("text channels need --width and --height");
    }
    if (!channel_path.empty()) {
      return read_text_channel(ReadText(channel_path), width, height);
    }
    if (r_path.empty() || g_path.empty() || b_path.empty()) {
      throw UsageError("text input needs all of --r, --g and --b");
    }
    return RgbImage(read_text_channel(ReadText(r_path), width, height),
                    read_text_channel(ReadText(g_path), width, height),
                    read_text_channel(ReadText(b_path), width, height));
  }
};

struct MembershipFlags {
  std::string kind = "polynomial";
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> center;
  std::vector<double> knots;
  double half_width = 64.0;

  void Register(CLI::App* cmd) {
    cmd->add_option("--membership", kind, "membership function")
        ->check(CLI::IsMember({"polynomial", "s", "cauchy-even", "cauchy-abs"}));
    cmd->add_option("--alpha", alpha, "Cauchy alpha");
    cmd->add_option("--beta", beta, "Cauchy beta");
    cmd->add_option("--center", center,
                    "fixed Cauchy center (default: the threshold)");
    cmd->add_option("--knots", knots, "fixed S-function knots a,b,c")
        ->expected(3)
        ->delimiter(',');
    cmd->add_option("--half-width", half_width,
                    "S-function knot spread around the threshold");
  }

  EnhanceConfig Build(ThresholdSource source) const {
    EnhanceConfig config;
    config.threshold = source;
    config.s_half_width = half_width;
    if (kind == "polynomial") {
      config.membership = PolynomialQuartic{};
    } else if (kind == "s") {
      SFunction s;
      if (!knots.empty()) {
        s = SFunction{knots[0], knots[1], knots[2]};
        config.center_on_threshold = false;
      }
      config.membership = s;
    } else if (kind == "cauchy-even") {
      CauchyEven m;
      if (alpha) m.alpha = *alpha;
      if (beta) {
        if (*beta != std::floor(*beta)) {
          throw UsageError("cauchy-even needs an integer --beta");
        }
        m.beta = static_cast<int>(*beta);
      }
      if (center) {
        m.center = *center;
        config.center_on_threshold = false;
      }
      config.membership = m;
    } else {
      CauchyAbs m;
      if (alpha) m.alpha = *alpha;
      if (beta) m.beta = *beta;
      if (center) {
        m.center = *center;
        config.center_on_threshold = false;
      }
      config.membership = m;
    }
    validate(config.membership);
    return config;
  }
};

struct SobelFlags {
  double threshold = kDefaultEdgeThreshold;
  std::string norm = "l1";
  std::string engine = "incremental";
  bool diagonal = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--threshold", threshold, "Sobel edge threshold")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--norm", norm, "gradient magnitude norm")
        ->check(CLI::IsMember({"l1", "l2"}));
    cmd->add_option("--engine", engine, "Sobel engine")
        ->check(CLI::IsMember({"direct", "incremental"}));
    cmd->add_flag("--diagonal", diagonal, "add the diagonal mask responses");
  }

  void Apply(DetectConfig& config) const {
    config.threshold = threshold;
    config.norm = norm == "l2" ? Norm::kL2 : Norm::kL1;
    config.engine = engine == "direct" ? Engine::kDirect : Engine::kIncremental;
    config.diagonal = diagonal;
  }
};

void Emit(const std::string& path, const Bytes& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  } else {
    write_file(path, bytes);
  }
}

void PrintWindow(const Window3x3& w, std::ostream& out) {
  out << w.row << '\t' << w.col;
  for (Intensity v : w.p) out << '\t' << static_cast<int>(v);
  out << '\n';
}

int RunDetect(const InputFlags& input, const MembershipFlags& membership,
              const SobelFlags& sobel, bool no_fuzzy,
              const std::optional<int>& otsu_fixed, const std::string& combine,
              const std::string& output, bool ascii,
              const std::string& channels_out, bool stats, std::ostream& out) {
  DetectConfig config;
  config.fuzzy_enabled = !no_fuzzy;
  config.enhance = membership.Build(
      otsu_fixed ? ThresholdSource{FixedThreshold{*otsu_fixed}}
                 : ThresholdSource{OtsuThreshold{}});
  sobel.Apply(config);
  config.combine = combine == "majority" ? Combine::kMajority : Combine::kOr;
  const PnmFormat format = ascii ? PnmFormat::kP1 : PnmFormat::kP4;

  const PnmImage image = input.Load();
  if (const auto* gray = std::get_if<GrayImage>(&image)) {
    ChannelStats s;
    const EdgeMap edges = detect_channel(*gray, config, &s);
    Emit(output, write_pnm(edges, format), out);
    if (stats) {
      out << "channel\tadd_count\tedge_pixels\n"
          << "gray\t" << s.add_count << '\t' << s.edge_pixels << '\n';
    }
    return 0;
  }

  const ColorEdges edges = detect_color(std::get<RgbImage>(image), config);
  Emit(output, write_pnm(edges.combined, format), out);
  if (!channels_out.empty()) {
    std::filesystem::create_directories(channels_out);
    const std::filesystem::path dir(channels_out);
    write_file((dir / "r.pbm").string(), write_pnm(edges.r, format));
    write_file((dir / "g.pbm").string(), write_pnm(edges.g, format));
    write_file((dir / "b.pbm").string(), write_pnm(edges.b, format));
  }
  if (stats) {
    out << "channel\tadd_count\tedge_pixels\n"
        << "r\t" << edges.r_stats.add_count << '\t' << edges.r_stats.edge_pixels
        << '\n'
        << "g\t" << edges.g_stats.add_count << '\t' << edges.g_stats.edge_pixels
        << '\n'
        << "b\t" << edges.b_stats.add_count << '\t' << edges.b_stats.edge_pixels
        << '\n'
        << "combined\t"
        << edges.r_stats.add_count + edges.g_stats.add_count +
               edges.b_stats.add_count
        << '\t' << edges.combined.count() << '\n';
  }
  return 0;
}

int RunEnhance(const InputFlags& input, const MembershipFlags& membership,
               const std::string& threshold, const std::string& output,
               bool ascii, std::ostream& out) {
  const EnhanceConfig config = membership.Build(ParseThresholdSource(threshold));
  const PnmImage image = input.Load();
  if (const auto* gray = std::get_if<GrayImage>(&image)) {
    const GrayImage enhanced = enhance_image(*gray, config);
    if (!input.channel_path.empty()) {
      const std::string text = write_text_channel(enhanced);
      Emit(output, Bytes(text.begin(), text.end()), out);
    } else {
      Emit(output, write_pnm(enhanced, ascii ? PnmFormat::kP2 : PnmFormat::kP5),
           out);
    }
    return 0;
  }
  const auto& rgb = std::get<RgbImage>(image);
  const RgbImage enhanced(enhance_image(rgb.r(), config),
                          enhance_image(rgb.g(), config),
                          enhance_image(rgb.b(), config));
  Emit(output, write_pnm(enhanced, ascii ? PnmFormat::kP3 : PnmFormat::kP6), out);
  return 0;
}

void PrintOtsuTable(const Histogram256& hist, std::ostream& out) {
  out << "t\tomega0\tomega1\tmu0\tmu1\tsigma_b2\n";
  out << std::setprecision(10);
  for (int t = 0; t < kGrayLevels; ++t) {
    const OtsuStats s = otsu_stats(hist, t);
    out << s.t << '\t' << s.omega0 << '\t' << s.omega1 << '\t' << s.mu0 << '\t'
        << s.mu1 << '\t' << s.sigma_b2 << '\n';
  }
}

int RunOtsu(const InputFlags& input, bool table, std::ostream& out) {
  const PnmImage image = input.Load();
  if (const auto* gray = std::get_if<GrayImage>(&image)) {
    const Histogram256 hist = histogram(*gray);
    out << otsu_threshold(hist) << '\n';
    if (table) PrintOtsuTable(hist, out);
    return 0;
  }
  const auto& rgb = std::get<RgbImage>(image);
  const std::pair<const char*, const GrayImage*> planes[] = {
      {"r", &rgb.r()}, {"g", &rgb.g()}, {"b", &rgb.b()}};
  for (const auto& [name, plane] : planes) {
    out << name << '\t' << otsu_threshold(histogram(*plane)) << '\n';
  }
  if (table) {
    for (const auto& [name, plane] : planes) {
      out << "# " << name << '\n';
      PrintOtsuTable(histogram(*plane), out);
    }
  }
  return 0;
}

int RunSobel(const InputFlags& input, const SobelFlags& sobel,
             const std::string& output, bool ascii, bool stats,
             std::size_t dump_windows, std::ostream& out) {
  const PnmImage image = input.Load();
  const auto* gray = std::get_if<GrayImage>(&image);
  if (!gray) throw UsageError("sobel takes a single channel; use detect for RGB");

  if (dump_windows > 0) {
    std::size_t dumped = 0;
    out << "row\tcol\tp1\tp2\tp3\tp4\tp5\tp6\tp7\tp8\tp9\n";
    LineBufferState state(gray->width(), gray->height());
    for (Intensity v : gray->pixels()) {
      if (dumped == dump_windows) break;
      if (auto w = state.push_pixel(v)) {
        PrintWindow(*w, out);
        ++dumped;
      }
    }
  }

  DetectConfig config;
  config.fuzzy_enabled = false;
  sobel.Apply(config);
  ChannelStats s;
  const EdgeMap edges = detect_channel(*gray, config, &s);
  if (!output.empty() || dump_windows == 0) {
    Emit(output, write_pnm(edges, ascii ? PnmFormat::kP1 : PnmFormat::kP4), out);
  }
  if (stats) {
    const std::size_t interior = (gray->width() - 2) * (gray->height() - 2);
    out << "add_count\tedge_pixels\tadds_per_pixel\n"
        << s.add_count << '\t' << s.edge_pixels << '\t'
        << static_cast<double>(s.add_count) / static_cast<double>(interior)
        << '\n';
  }
  return 0;
}

void PrintTrace(bool p, bool q, std::ostream& out) {
  static constexpr const char* kSteps[] = {"r = q -> r", "s = p -> s",
                                           "t = r -> t", "t = s -> t"};
  const memristor::XorTrace trace = memristor::xor_trace(p, q);
  out << "step\toperation\tp\tq\tr\ts\tt\n";
  const memristor::ImplyCircuit init = memristor::load_xor_inputs(p, q);
  auto row = [&out](const std::string& step, const char* op,
                    const memristor::ImplyCircuit& c) {
    out << step << '\t' << op << '\t' << memristor::to_bool(c.p) << '\t'
        << memristor::to_bool(c.q) << '\t' << memristor::to_bool(c.r) << '\t'
        << memristor::to_bool(c.s) << '\t' << memristor::to_bool(c.t) << '\n';
  };
  row("0", "load", init);
  for (int i = 0; i < 4; ++i) row(std::to_string(i + 1), kSteps[i], trace[i]);
}

int RunMemristor(const InputFlags& input, const std::string& threshold,
                 const std::string& output, bool ascii, bool trace, int p,
                 int q, std::ostream& out) {
  if (trace) {
    PrintTrace(p != 0, q != 0, out);
    if (input.pnm_path.empty() && !input.FromText()) return 0;
  }
  const PnmImage image = input.Load();
  const auto* gray = std::get_if<GrayImage>(&image);
  if (!gray) throw UsageError("memristor takes a single channel");
  const EdgeMap edges =
      memristor::memristive_edge_map(*gray, ParseThresholdSource(threshold));
  if (!trace || !output.empty()) {
    Emit(output, write_pnm(edges, ascii ? PnmFormat::kP1 : PnmFormat::kP4), out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fuzzy-enhanced Sobel edge detection for RGB images", "fuzzyedge"};
  app.require_subcommand(1);

  // detect
  auto* detect = app.add_subcommand("detect", "fuzzy preprocessing + Sobel, per channel");
  InputFlags detect_in;
  MembershipFlags detect_membership;
  SobelFlags detect_sobel;
  bool no_fuzzy = false;
  std::optional<int> otsu_fixed;
  std::string combine = "or";
  std::string detect_out;
  bool detect_ascii = false;
  std::string channels_out;
  bool detect_stats = false;
  detect_in.Register(detect, true);
  detect_membership.Register(detect);
  detect_sobel.Register(detect);
  detect->add_flag("--no-fuzzy", no_fuzzy, "skip fuzzy preprocessing");
  detect->add_option("--otsu-fixed", otsu_fixed,
                     "fixed membership threshold instead of Otsu")
      ->check(CLI::Range(0, 255));
  detect->add_option("--combine", combine, "channel combination rule")
      ->check(CLI::IsMember({"or", "majority"}));
  detect->add_option("-o,--output", detect_out, "combined edge map (PBM)");
  detect->add_flag("--ascii", detect_ascii, "write P1 instead of P4");
  detect->add_option("--channels-out", channels_out,
                     "directory for the per-channel edge maps");
  detect->add_flag("--stats", detect_stats, "print add counts and edge counts");

  // enhance
  auto* enhance = app.add_subcommand("enhance", "fuzzy contrast enhancement");
  InputFlags enhance_in;
  MembershipFlags enhance_membership;
  std::string enhance_threshold = "otsu";
  std::string enhance_out;
  bool enhance_ascii = false;
  enhance_in.Register(enhance, false);
  enhance_membership.Register(enhance);
  enhance->add_option("--threshold", enhance_threshold,
                      "membership threshold: otsu or 0..255");
  enhance->add_option("-o,--output", enhance_out, "enhanced image");
  enhance->add_flag("--ascii", enhance_ascii, "write P2/P3 instead of P5/P6");

  // otsu
  auto* otsu = app.add_subcommand("otsu", "Otsu threshold of each channel");
  InputFlags otsu_in;
  bool otsu_table = false;
  otsu_in.Register(otsu, false);
  otsu->add_flag("--table", otsu_table, "print the 256-row statistics table");

  // sobel
  auto* sobel = app.add_subcommand("sobel", "Sobel edge map of one channel");
  InputFlags sobel_in;
  SobelFlags sobel_flags;
  std::string sobel_out;
  bool sobel_ascii = false;
  bool sobel_stats = false;
  std::size_t dump_windows = 0;
  sobel_in.Register(sobel, false);
  sobel_flags.Register(sobel);
  sobel->add_option("-o,--output", sobel_out, "edge map (PBM)");
  sobel->add_flag("--ascii", sobel_ascii, "write P1 instead of P4");
  sobel->add_flag("--stats", sobel_stats, "print the add count");
  sobel->add_option("--dump-windows", dump_windows,
                    "print the first n streamed windows");

  // memristor
  auto* mem = app.add_subcommand("memristor", "IMPLY-logic XOR edge scan");
  InputFlags mem_in;
  std::string mem_threshold = "otsu";
  std::string mem_out;
  bool mem_ascii = false;
  bool mem_trace = false;
  int trace_p = 1;
  int trace_q = 0;
  mem_in.Register(mem, false);
  mem->add_option("--threshold", mem_threshold,
                  "binarization threshold: otsu or 0..255");
  mem->add_option("-o,--output", mem_out, "edge map (PBM)");
  mem->add_flag("--ascii", mem_ascii, "write P1 instead of P4");
  mem->add_flag("--trace", mem_trace, "print the XOR stimulation sequence");
  mem->add_option("--p", trace_p, "traced input p")->check(CLI::Range(0, 1));
  mem->add_option("--q", trace_q, "traced input q")->check(CLI::Range(0, 1));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (detect->parsed()) {
      return RunDetect(detect_in, detect_membership, detect_sobel, no_fuzzy,
                       otsu_fixed, combine, detect_out, detect_ascii,
                       channels_out, detect_stats, out);
    }
    if (enhance->parsed()) {
      return RunEnhance(enhance_in, enhance_membership, enhance_threshold,
                        enhance_out, enhance_ascii, out);
    }
    if (otsu->parsed()) return RunOtsu(otsu_in, otsu_table, out);
    if (sobel->parsed()) {
      return RunSobel(sobel_in, sobel_flags, sobel_out, sobel_ascii,
                      sobel_stats, dump_windows, out);
    }
    if (mem->parsed()) {
      return RunMemristor(mem_in, mem_threshold, mem_out, mem_ascii, mem_trace,
                          trace_p, trace_q, out);
    }
  } catch (const std::exception& e) {
    err << "fuzzyedge: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace fuzzyedge
