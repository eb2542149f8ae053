#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <polymap/cli.hpp>

namespace {

bool parse_grid(const std::string& text, std::size_t& rows, std::size_t& cols) {
    unsigned long r = 0, c = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lux%lu%c", &r, &c, &tail) != 2) return false;
    rows = r;
    cols = c;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic mapping certificates for Jordan polygons"};
    app.require_subcommand(1);

    std::string polygon_path, cert_path, out_path, svg_path;
    polymap::SolveOptions sopts;
    polymap::VerifyOptions vopts;
    std::string jacobian_grid = "64x256", collision_grid = "24x48", render_grid = "8x16";

    CLI::App* solve = app.add_subcommand("solve", "build and certify a harmonic map");
    solve->add_option("polygon", polygon_path, "polygon JSON file")->required();
    solve->add_option("--out", out_path, "write the certificate JSON here");
    solve->add_option("--svg", svg_path, "write a rendering of the image grid here");
    solve->add_option("--min-margin", sopts.min_margin, "required exterior margin");
    solve->add_option("--eps0", sopts.eps0, "initial ear height fraction");
    solve->add_option("--max-halvings", sopts.max_halvings, "epsilon retries per ear");
    solve->add_option("--seed-grid", sopts.seed_grid, "extra root seeds per pole (0 = ring only)");

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
    verify->add_option("polygon", polygon_path, "polygon JSON file")->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();
    verify->add_option("--boundary-samples", vopts.boundary_samples, "trace sample count");
    verify->add_option("--jacobian-grid", jacobian_grid, "RxS Jacobian sign grid");
    verify->add_option("--collision-grid", collision_grid, "RxS collision grid");
    verify->add_option("--probes", vopts.probe_points, "interior winding probes");

    CLI::App* ears = app.add_subcommand("ears", "list the ears of a polygon");
    ears->add_option("polygon", polygon_path, "polygon JSON file")->required();

    CLI::App* render = app.add_subcommand("render", "draw the image of a polar grid");
    render->add_option("polygon", polygon_path, "polygon JSON file")->required();
    render->add_option("certificate", cert_path, "certificate JSON file")->required();
    render->add_option("--grid", render_grid, "RxS circles and rays (0x0 = outline only)");
    render->add_option("--svg", svg_path, "output file (stdout when omitted)");

    double A = 0.0, B = 0.0;
    std::vector<double> angles{polymap::pi / 6.0, polymap::pi / 2.0, 5.0 * polymap::pi / 6.0};
    std::vector<double> ys{1e-3, 1e-4, 1e-5, 1e-6};
    CLI::App* los = app.add_subcommand("los-table", "boundary approach ratios vs the limit law");
    los->add_option("--A", A, "distance to the near end of the interval")->required();
    los->add_option("--B", B, "interval length")->required();
    los->add_option("--angles", angles, "approach angles in (0, pi)");
    los->add_option("--y", ys, "heights to sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : polymap::exit_bad_input;
    }

    if (solve->parsed()) return polymap::cmd_solve(polygon_path, out_path, svg_path, sopts, std::cout);

    if (verify->parsed()) {
        if (!parse_grid(jacobian_grid, vopts.jacobian_radii, vopts.jacobian_angles) ||
            !parse_grid(collision_grid, vopts.collision_radii, vopts.collision_angles)) {
            std::cout << "invalid input: grid must look like 64x256\n";
            return polymap::exit_bad_input;
        }
        return polymap::cmd_verify(polygon_path, cert_path, vopts, std::cout);
    }

    if (ears->parsed()) return polymap::cmd_ears(polygon_path, std::cout);

    if (render->parsed()) {
        std::size_t circles = 0, rays = 0;
        if (!parse_grid(render_grid, circles, rays)) {
            std::cout << "invalid input: grid must look like 8x16\n";
            return polymap::exit_bad_input;
        }
        return polymap::cmd_render(polygon_path, cert_path, circles, rays, svg_path, std::cout);
    }

    if (los->parsed()) return polymap::cmd_los_table(A, B, angles, ys, std::cout);

    return polymap::exit_bad_input;
}
