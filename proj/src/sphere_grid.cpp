// Lebedev-Laikov quadrature grids on the unit sphere.
//
// Rules are generated from their octahedral symmetry orbits; the orbit
// parameters are the published Lebedev-Laikov values (weights normalized so
// that they sum to 1 before the 4*pi scaling applied here).
//
//   V.I. Lebedev, D.N. Laikov, "A quadrature formula for the sphere of the
//   131st algebraic order of accuracy", Doklady Mathematics 59 (1999) 477-481.

#include "farloc/sphere_grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace farloc {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void push(SphereGrid& g, double x, double y, double z, double w) {
    g.nodes.push_back({x, y, z});
    g.weights.push_back(w * kFourPi);
}

// orbit (0,0,a), 6 points
void gen_oh1(SphereGrid& g, double w) {
    for (int dir = 0; dir < 3; ++dir) {
        for (int s = -1; s <= 1; s += 2) {
            double v[3] = {0, 0, 0};
            v[dir] = s;
            push(g, v[0], v[1], v[2], w);
        }
    }
}

// orbit (0,a,a), a = 1/sqrt(2), 12 points
void gen_oh2(SphereGrid& g, double w) {
    const double a = std::sqrt(0.5);
    for (int dir = 0; dir < 3; ++dir) {
        for (int s1 = -1; s1 <= 1; s1 += 2) {
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                double v[3];
                v[dir] = 0;
                v[(dir + 1) % 3] = s1 * a;
                v[(dir + 2) % 3] = s2 * a;
                push(g, v[0], v[1], v[2], w);
            }
        }
    }
}

// orbit (a,a,a), a = 1/sqrt(3), 8 points
void gen_oh3(SphereGrid& g, double w) {
    const double a = std::sqrt(1.0 / 3.0);
    for (int s3 = -1; s3 <= 1; s3 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
            for (int s1 = -1; s1 <= 1; s1 += 2) push(g, s1 * a, s2 * a, s3 * a, w);
}

// orbit (a,a,b), b = sqrt(1-2a^2), 24 points
void gen_oh4(SphereGrid& g, double w, double a) {
    const double b = std::sqrt(1.0 - 2.0 * a * a);
    for (int dir = 0; dir < 3; ++dir) {
        for (int s3 = -1; s3 <= 1; s3 += 2) {
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                for (int s1 = -1; s1 <= 1; s1 += 2) {
                    double v[3];
                    v[dir] = s3 * b;
                    v[(dir + 1) % 3] = s1 * a;
                    v[(dir + 2) % 3] = s2 * a;
                    push(g, v[0], v[1], v[2], w);
                }
            }
        }
    }
}

// orbit (a,b,0), b = sqrt(1-a^2), 24 points
void gen_oh5(SphereGrid& g, double w, double a) {
    const double b = std::sqrt(1.0 - a * a);
    double p = a, q = b;
    for (int swap = 0; swap < 2; ++swap) {
        for (int dir = 0; dir < 3; ++dir) {
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                for (int s1 = -1; s1 <= 1; s1 += 2) {
                    double v[3];
                    v[dir] = 0;
                    v[(dir + 1) % 3] = s1 * p;
                    v[(dir + 2) % 3] = s2 * q;
                    push(g, v[0], v[1], v[2], w);
                }
            }
        }
        p = b;
        q = a;
    }
}

// orbit (a,b,c), c = sqrt(1-a^2-b^2), 48 points
void gen_oh6(SphereGrid& g, double w, double a, double b) {
    const double c = std::sqrt(1.0 - a * a - b * b);
    const double row[2][5] = {{a, b, c, a, b}, {b, a, c, b, a}};
    for (int rev = 0; rev < 2; ++rev) {
        for (int dir = 0; dir < 3; ++dir) {
            for (int s3 = -1; s3 <= 1; s3 += 2) {
                for (int s2 = -1; s2 <= 1; s2 += 2) {
                    for (int s1 = -1; s1 <= 1; s1 += 2) {
                        push(g, s1 * row[rev][dir], s2 * row[rev][dir + 1], s3 * row[rev][dir + 2],
                             w);
                    }
                }
            }
        }
    }
}

} // namespace

const std::vector<int>& supported_lebedev_sizes() {
    static const std::vector<int> sizes = {6, 14, 26, 38, 50, 74, 86, 110, 146, 170, 194, 302, 590};
    return sizes;
}

SphereGrid build_lebedev(int n_points) {
    SphereGrid g;
    switch (n_points) {
    case 6:
        g.exactness_degree = 3;
        gen_oh1(g, 1.0 / 6.0);
        break;
    case 14:
        g.exactness_degree = 5;
        gen_oh1(g, 2.0 / 30.0);
        gen_oh3(g, 3.0 / 40.0);
        break;
    case 26:
        g.exactness_degree = 7;
        gen_oh1(g, .04761904761904762);
        gen_oh2(g, .03809523809523810);
        gen_oh3(g, .03214285714285714);
        break;
    case 38:
        g.exactness_degree = 9;
        gen_oh1(g, .009523809523809524);
        gen_oh3(g, .03214285714285714);
        gen_oh5(g, .02857142857142857, .4597008433809831);
        break;
    case 50:
        g.exactness_degree = 11;
        gen_oh1(g, .01269841269841270);
        gen_oh2(g, .02257495590828924);
        gen_oh3(g, .02109375000000000);
        gen_oh4(g, .02017333553791887, .3015113445777636);
        break;
    case 74:
        g.exactness_degree = 13;
        gen_oh1(g, .0005130671797338464);
        gen_oh2(g, .01660406956574204);
        gen_oh3(g, -.02958603896103896);
        gen_oh4(g, .02657620708215946, .4803844614152614);
        gen_oh5(g, .01652217099371571, .3207726489807764);
        break;
    case 86:
        g.exactness_degree = 15;
        gen_oh1(g, .01154401154401154);
        gen_oh3(g, .01194390908585628);
        gen_oh4(g, .01111055571060340, .3696028464541502);
        gen_oh4(g, .01187650129453714, .6943540066026664);
        gen_oh5(g, .01181230374690448, .3742430390903412);
        break;
    case 110:
        g.exactness_degree = 17;
        gen_oh1(g, .003828270494937162);
        gen_oh3(g, .009793737512487512);
        gen_oh4(g, .008211737283191111, .1851156353447362);
        gen_oh4(g, .009942814891178103, .6904210483822922);
        gen_oh4(g, .009595471336070963, .3956894730559419);
        gen_oh5(g, .009694996361663028, .4783690288121502);
        break;
    case 146:
        g.exactness_degree = 19;
        gen_oh1(g, .5996313688621381e-3);
        gen_oh2(g, .7372999718620756e-2);
        gen_oh3(g, .7210515360144488e-2);
        gen_oh4(g, .7116355493117555e-2, .6764410400114264);
        gen_oh4(g, .6753829486314477e-2, .4174961227965453);
        gen_oh4(g, .7574394159054034e-2, .1574676672039082);
        gen_oh6(g, .6991087353303262e-2, .1403553811713183, .4493328323269557);
        break;
    case 170:
        g.exactness_degree = 21;
        gen_oh1(g, .5544842902037365e-2);
        gen_oh2(g, .6071332770670752e-2);
        gen_oh3(g, .6383674773515093e-2);
        gen_oh4(g, .5183387587747790e-2, .2551252621114134);
        gen_oh4(g, .6317929009813725e-2, .6743601460362766);
        gen_oh4(g, .6201670006589077e-2, .4318910696719410);
        gen_oh5(g, .5477143385137348e-2, .2613931360335988);
        gen_oh6(g, .5968383987681156e-2, .4990453161796037, .1446630744325115);
        break;
    case 194:
        g.exactness_degree = 23;
        gen_oh1(g, .1782340447244611e-2);
        gen_oh2(g, .5716905949977102e-2);
        gen_oh3(g, .5573383178848738e-2);
        gen_oh4(g, .5608704082587997e-2, .6712973442695226);
        gen_oh4(g, .5158237711805383e-2, .2892465627575439);
        gen_oh4(g, .5518771467273614e-2, .4446933178717437);
        gen_oh4(g, .4106777028169394e-2, .1299335447650067);
        gen_oh5(g, .5051846064614808e-2, .3457702197611283);
        gen_oh6(g, .5530248916233094e-2, .1590417105383530, .8360360154824589);
        break;
    case 302:
        g.exactness_degree = 29;
        gen_oh1(g, .8545911725128148e-3);
        gen_oh3(g, .3599119285025571e-2);
        gen_oh4(g, .3449788424305883e-2, .3515640345570105);
        gen_oh4(g, .3604822601419882e-2, .6566329410219612);
        gen_oh4(g, .3576729661743367e-2, .4729054132581005);
        gen_oh4(g, .2352101413689164e-2, .0961830852261478);
        gen_oh4(g, .3108953122413675e-2, .2219645236294178);
        gen_oh4(g, .3650045807677255e-2, .7011766416089545);
        gen_oh5(g, .2982344963171804e-2, .2644152887060663);
        gen_oh5(g, .3600820932216460e-2, .5718955891878961);
        gen_oh6(g, .3571540554273387e-2, .2510034751770465, .8000727494073951);
        gen_oh6(g, .3392312205006170e-2, .1233548532583327, .4127724083168531);
        break;
    case 590:
        g.exactness_degree = 41;
        gen_oh1(g, .3095121295306187e-3);
        gen_oh3(g, .1852379698597489e-2);
        gen_oh4(g, .1871790639277744e-2, .7040954938227469);
        gen_oh4(g, .1858812585438317e-2, .6807744066455244);
        gen_oh4(g, .1852028828296213e-2, .6372546939258752);
        gen_oh4(g, .1846715956151242e-2, .5044419707800358);
        gen_oh4(g, .1818471778162769e-2, .4215761784010967);
        gen_oh4(g, .1749564657281154e-2, .3317920736472123);
        gen_oh4(g, .1617210647254411e-2, .2384736701421887);
        gen_oh4(g, .1384737234851692e-2, .1459036449157763);
        gen_oh4(g, .9764331165051050e-3, .0609503411550720);
        gen_oh5(g, .1857161196774078e-2, .6116843442009876);
        gen_oh5(g, .1705153996395864e-2, .3964755348199858);
        gen_oh5(g, .1300321685886048e-2, .1724782009907724);
        gen_oh6(g, .1842866472905286e-2, .5610263808622060, .3518280927733519);
        gen_oh6(g, .1802658934377451e-2, .4742392842551980, .2634716655937950);
        gen_oh6(g, .1849830560443660e-2, .5984126497885380, .1816640840360209);
        gen_oh6(g, .1713904507106709e-2, .3791035407695563, .1720795225656878);
        gen_oh6(g, .1555213603396808e-2, .2778673190586244, .0821302158193251);
        gen_oh6(g, .1802239128008525e-2, .5033564271075117, .0899920584207488);
        break;
    default: {
        std::ostringstream msg;
        msg << "unsupported Lebedev rule size " << n_points << "; supported sizes:";
        for (int s : supported_lebedev_sizes()) msg << " " << s;
        throw std::invalid_argument(msg.str());
    }
    }
    if (static_cast<int>(g.size()) != n_points)
        throw std::logic_error("Lebedev orbit table inconsistent with declared point count");
    return g;
}

std::shared_ptr<const SphereGrid> make_lebedev(int n_points) {
    return std::make_shared<const SphereGrid>(build_lebedev(n_points));
}

} // namespace farloc
