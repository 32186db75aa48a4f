#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "rdhe/errors.hpp"
#include "rdhe/image_io.hpp"
#include "rdhe/metrics.hpp"
#include "rdhe/pipeline.hpp"

namespace rdhe::cli {
namespace {

using cipher::Bytes;

struct Options {
  std::string in;
  std::string out;
  std::string ke;
  std::string kw;
  std::string msg;
  std::string beta;
  int id = 0;
  int mode = 2;
  // metrics
  std::string recovered;
  std::string container;
  std::string format = "kv";
  std::string histogram;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error(ErrorKind::RejectedInput, message) {}
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RejectedInput:
    case ErrorKind::MissingKey: return kUsage;
    case ErrorKind::Parse: return kParse;
    case ErrorKind::Capacity: return kCapacity;
    case ErrorKind::Corruption: return kCorruption;
  }
  return kUsage;
}

Bytes file_bytes(const std::string& path) { return io::read_file(path); }

void write_text(const std::string& path, const std::string& text) {
  io::write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

int cmd_encrypt(const Options& o, std::ostream& out) {
  const auto image = io::read_pgm(file_bytes(o.in));
  const auto stream = keystream_from_arg(o.ke, cipher::kImageLabel);
  const auto result =
      pipeline::provider_encrypt(image, *stream, codec::PublicId(o.id), codec::embed_mode_from_bits(o.mode));
  io::write_file(o.out, io::write_container(result.container));
  const std::string beta_path = o.beta.empty() ? o.out + ".beta" : o.beta;
  write_text(beta_path, format_beta(result.beta.bits));
  out << "wrote " << o.out << " (" << result.container.body.size() << " body bytes), beta -> " << beta_path << '\n';
  return kOk;
}

Bytes message_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return file_bytes(arg.substr(1));
  return Bytes(arg.begin(), arg.end());
}

int cmd_embed(const Options& o, std::ostream& out) {
  const auto container = io::read_container(file_bytes(o.in));
  const std::string text = [&] {
    const auto b = file_bytes(o.beta);
    return std::string(b.begin(), b.end());
  }();
  const pipeline::Beta beta{parse_beta(text)};
  const auto message = cipher::bytes_to_bits(message_from_arg(o.msg));
  const auto stream = keystream_from_arg(o.kw, cipher::kMessageLabel);
  const auto marked = pipeline::hider_embed(container, beta, message, *stream);
  io::write_file(o.out, io::write_container(marked));
  const auto cap = pipeline::capacity_of(marked.width, marked.height, marked.mode);
  out << "embedded " << message.size() << " of " << cap.usable_message_bits << " message bits into " << o.out
      << '\n';
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const auto container = io::read_container(file_bytes(o.in));
  const auto stream = keystream_from_arg(o.kw, cipher::kMessageLabel);
  const auto bits = pipeline::extract_message(container, *stream);
  io::write_file(o.out, cipher::bits_to_bytes(bits));
  out << "extracted " << bits.size() << " message bits to " << o.out << '\n';
  return kOk;
}

int cmd_recover(const Options& o, std::ostream& out) {
  if (o.ke.empty()) throw MissingKeyError("recover requires --ke");
  if (!o.kw.empty() && o.msg.empty()) throw UsageError("--kw given without --msg output path");
  const auto container = io::read_container(file_bytes(o.in));
  const auto image_stream = keystream_from_arg(o.ke, cipher::kImageLabel);
  std::unique_ptr<cipher::KeystreamSource> message_stream;
  if (!o.kw.empty()) message_stream = keystream_from_arg(o.kw, cipher::kMessageLabel);

  const auto result = pipeline::receiver_process(container, image_stream.get(), message_stream.get());
  io::write_file(o.out, io::write_pgm(*result.image));
  out << "recovered " << result.image->width << "x" << result.image->height << " image to " << o.out << '\n';
  if (result.message) {
    io::write_file(o.msg, cipher::bits_to_bytes(*result.message));
    out << "extracted " << result.message->size() << " message bits to " << o.msg << '\n';
  }
  return kOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const auto original = io::read_pgm(file_bytes(o.in));
  const auto recovered = io::read_pgm(file_bytes(o.recovered));
  const auto container = io::read_container(file_bytes(o.container));

  const auto payload = pipeline::extract_payload(container);
  const std::uint64_t embedded = pipeline::kFramingBits + payload.encrypted_message.size();
  const auto fidelity = metrics::psnr(original, recovered);

  metrics::QualityReport q;
  q.ec_bpp = metrics::embedding_rate(embedded, container.body.size());
  q.ec_original_bpp = metrics::embedding_rate(embedded, original.pixel_count());
  q.mse = fidelity.mse;
  q.psnr_db = fidelity.psnr_db;
  q.ssim = metrics::ssim(original, recovered);
  q.expansion = metrics::expansion_factor(original.pixel_count(), container.body.size());
  const auto s = metrics::analyze(pipeline::body_as_raster(container));

  std::string report;
  if (o.format == "json") {
    report = metrics::to_json(q, s) + "\n";
  } else {
    report = metrics::to_key_value(q, s);
  }
  if (o.out.empty()) {
    out << report;
  } else {
    write_text(o.out, report);
  }
  if (!o.histogram.empty()) write_text(o.histogram, metrics::histogram_csv(s.histogram) + "\n");
  return kOk;
}

}  // namespace

std::unique_ptr<cipher::KeystreamSource> keystream_from_arg(std::string_view arg, std::string_view context_label) {
  constexpr std::string_view kPad = "pad:@";
  if (arg.starts_with(kPad)) {
    return std::make_unique<cipher::PadKeystream>(io::read_file(std::string(arg.substr(kPad.size()))));
  }
  Bytes material;
  if (arg.starts_with('@')) {
    material = io::read_file(std::string(arg.substr(1)));
  } else {
    material.assign(arg.begin(), arg.end());
  }
  if (material.empty()) throw RejectedInputError("key material must not be empty");
  return std::make_unique<cipher::ChaChaKeystream>(material, context_label);
}

std::string format_beta(std::uint8_t bits) {
  std::string s;
  for (int k = 3; k >= 0; --k) s += ((bits >> k) & 1u) ? '1' : '0';
  return s + "\n";
}

std::uint8_t parse_beta(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.size() != 4 || text.find_first_not_of("01") != std::string_view::npos) {
    throw ParseError("beta sidecar must hold exactly four 0/1 characters");
  }
  std::uint8_t bits = 0;
  for (char c : text) bits = static_cast<std::uint8_t>(bits << 1 | (c == '1' ? 1u : 0u));
  return bits;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible data hiding in encrypted grayscale images", "rdhe"};
  app.require_subcommand(1, 1);
  Options o;

  auto key_help = "key: text, @file (key material), or pad:@file (literal keystream)";
  auto* encrypt = app.add_subcommand("encrypt", "provider: encrypt and encode an image");
  encrypt->add_option("--in", o.in, "input PGM (P5)")->required();
  encrypt->add_option("--out", o.out, "output container")->required();
  encrypt->add_option("--ke", o.ke, key_help)->required();
  encrypt->add_option("--id", o.id, "public identity")->required()->check(CLI::Range(2, 15));
  encrypt->add_option("--mode", o.mode, "bits per symbol")->check(CLI::IsMember({1, 2}));
  encrypt->add_option("--beta", o.beta, "beta sidecar output (default <out>.beta)");

  auto* embed = app.add_subcommand("embed", "hider: embed a message into a container");
  embed->add_option("--in", o.in, "input container")->required();
  embed->add_option("--out", o.out, "marked container")->required();
  embed->add_option("--beta", o.beta, "beta sidecar from encrypt")->required();
  embed->add_option("--msg", o.msg, "message: text or @file")->required();
  embed->add_option("--kw", o.kw, key_help)->required();

  auto* extract = app.add_subcommand("extract", "receiver with k_w: extract the message");
  extract->add_option("--in", o.in, "marked container")->required();
  extract->add_option("--out", o.out, "message output file")->required();
  extract->add_option("--kw", o.kw, key_help)->required();

  auto* recover = app.add_subcommand("recover", "receiver with k_e: recover the image");
  recover->add_option("--in", o.in, "marked container")->required();
  recover->add_option("--out", o.out, "recovered PGM")->required();
  recover->add_option("--ke", o.ke, key_help);
  recover->add_option("--kw", o.kw, key_help + std::string(" (also extracts the message)"));
  recover->add_option("--msg", o.msg, "message output file when --kw is given");

  auto* metrics_cmd = app.add_subcommand("metrics", "quality and security report");
  metrics_cmd->add_option("--in", o.in, "original PGM")->required();
  metrics_cmd->add_option("--recovered", o.recovered, "recovered PGM")->required();
  metrics_cmd->add_option("--container", o.container, "marked container")->required();
  metrics_cmd->add_option("--out", o.out, "report file (default stdout)");
  metrics_cmd->add_option("--format", o.format, "kv or json")->check(CLI::IsMember({"kv", "json"}));
  metrics_cmd->add_option("--histogram", o.histogram, "write the body histogram as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rdhe: usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*encrypt) return cmd_encrypt(o, out);
    if (*embed) return cmd_embed(o, out);
    if (*extract) return cmd_extract(o, out);
    if (*recover) return cmd_recover(o, out);
    return cmd_metrics(o, out);
  } catch (const Error& e) {
    const char* label = e.kind() == ErrorKind::RejectedInput || e.kind() == ErrorKind::MissingKey
                            ? "usage"
                            : to_string(e.kind());
    err << "rdhe: " << label << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "rdhe: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rdhe::cli
