#include "dvbp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "dvbp/error.hpp"
#include "text_util.hpp"

namespace dvbp {

std::string write_instance_csv(const Instance& instance) {
    std::ostringstream out;
    for (const auto& [key, value] : instance.metadata()) {
        if (key == "capacity") continue;
        out << "# " << key << '=' << value << '\n';
    }
    if (instance.capacity() != SizeVec::ones(instance.dimension())) {
        out << "# capacity=";
        for (size_t j = 0; j < instance.dimension(); ++j) out << (j ? "," : "") << instance.capacity()[j].str();
        out << '\n';
    }
    out << "id,arrival,departure";
    for (size_t j = 1; j <= instance.dimension(); ++j) out << ",s" << j;
    out << '\n';
    for (const auto& item : instance.items()) {
        out << item.id << ',' << item.arrival.str() << ',' << item.departure.str();
        for (const auto& c : item.size) out << ',' << c.str();
        out << '\n';
    }
    return out.str();
}

Instance parse_instance_csv(std::string_view text) {
    std::map<std::string, std::string> metadata;
    std::vector<Item> items;
    size_t dim = 0;
    bool have_header = false;

    detail::for_each_line(text, [&](size_t lineno, std::string_view line) {
        auto at = [lineno](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
        if (line.front() == '#') {
            auto body = detail::trim(line.substr(1));
            if (auto eq = body.find('='); eq != std::string_view::npos) {
                metadata[std::string(detail::trim(body.substr(0, eq)))] = std::string(detail::trim(body.substr(eq + 1)));
            }
            return;
        }
        auto fields = detail::split(line, ',');
        if (!have_header) {
            if (fields.size() < 4 || fields[0] != "id" || fields[1] != "arrival" || fields[2] != "departure") {
                fail(ErrorCode::Parse, at("expected header 'id,arrival,departure,s1,...,sd'"));
            }
            for (size_t j = 3; j < fields.size(); ++j) {
                if (fields[j] != "s" + std::to_string(j - 2)) {
                    fail(ErrorCode::Parse, at("unexpected column '" + std::string(fields[j]) + "'"));
                }
            }
            dim = fields.size() - 3;
            have_header = true;
            return;
        }
        if (fields.size() != dim + 3) {
            fail(ErrorCode::Parse, at("expected " + std::to_string(dim + 3) + " fields, got " + std::to_string(fields.size())));
        }
        try {
            Item item;
            item.id = detail::parse_int64(fields[0]);
            item.arrival = Scalar::parse(fields[1]);
            item.departure = Scalar::parse(fields[2]);
            std::vector<Scalar> comps;
            comps.reserve(dim);
            for (size_t j = 0; j < dim; ++j) comps.push_back(Scalar::parse(fields[3 + j]));
            item.size = SizeVec(std::move(comps));
            items.push_back(std::move(item));
        } catch (const Error& e) {
            fail(ErrorCode::Parse, at(e.what()));
        }
    });

    if (!have_header) fail(ErrorCode::Parse, "instance has no header line");
    if (items.empty()) fail(ErrorCode::Parse, "instance has no items");

    SizeVec capacity = SizeVec::ones(dim);
    if (auto it = metadata.find("capacity"); it != metadata.end()) {
        auto parts = detail::split(it->second, ',');
        if (parts.size() != dim) fail(ErrorCode::Parse, "capacity metadata has the wrong dimension");
        for (size_t j = 0; j < dim; ++j) capacity[j] = Scalar::parse(parts[j]);
        metadata.erase(it);
    }

    try {
        Instance instance(dim, std::move(items), std::move(capacity));
        for (const auto& [k, v] : metadata) instance.set_metadata(k, v);
        return instance;
    } catch (const Error& e) {
        fail(ErrorCode::Parse, e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

Instance read_instance_file(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return parse_instance_csv(text);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void write_instance_file(const Instance& instance, const std::string& path) {
    write_text_file(path, write_instance_csv(instance));
}

}  // namespace dvbp
