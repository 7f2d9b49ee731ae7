"""Print the worked examples: a small symbolic square, P4, the paw, K_n and the net."""

from beisym.graphs import make_family
from beisym.ideals import minimalize, parse_monomial, symbolic_power
from beisym.invariants import sp_of, waldschmidt
from beisym.polyhedron import build_sp, enumerate_vertices, format_qvector, full_vertices, max_vertex_coord_sum
from beisym.primes import brute_force_primes, inid_primes


def show_vertices(title, p, n=None):
    vs = enumerate_vertices(p)
    print(f"{title}: {len(vs)} vertices")
    full = set(full_vertices(p, n, vs)) if n else set()
    for a in vs:
        print(f"  {format_qvector(a)}{'  full' if a in full else ''}")


def main():
    ideal = minimalize([parse_monomial(t, 4) for t in ("x1*x2*x3", "x1*x2*x4", "x3*x4")])
    primes = brute_force_primes(ideal)
    print(f"I = {ideal.format()}")
    print(f"I^(2) = {symbolic_power(primes, 2).format()}")
    show_vertices("SP(I)", build_sp(primes))

    show_vertices("\nSP(gin(J_P4))", sp_of(make_family("path", 4), "gin"), 4)

    paw = make_family("paw")
    show_vertices("\nSP(I_paw)", sp_of(paw, "edge"))
    show_vertices("SP(gin(J_paw))", sp_of(paw, "gin"), 4)
    print(f"w-hat: gin {waldschmidt(paw, 'gin')}, edge {waldschmidt(paw, 'edge')}")

    print("\ncomplete graphs")
    for n in range(2, 7):
        g = make_family("complete", n)
        print(f"  K{n}: w-hat(gin) = {waldschmidt(g, 'gin')}, w-hat(in) = {waldschmidt(g, 'inid')}, "
              f"reg-hat(in) = {max_vertex_coord_sum(sp_of(g, 'inid'))}")

    print("\nminimal primes of in(J_net)")
    net = make_family("net")
    for p in inid_primes(net):
        names = [f"x{i}" if i <= net.n else f"y{i - net.n}" for i in p.members]
        print(f"  ({', '.join(names)})  T={list(p.witnesses[0].T)}")


if __name__ == "__main__":
    main()
