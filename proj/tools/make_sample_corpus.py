# Apache License, Version 2.0, refer to LICENSE.txt
"""Writes a small synthetic two-magazine corpus for trying out the CLI."""

import argparse
import json
import random

THEMES = {
    "familia": "familia hijos madre padre casa hogar crianza bebé escuela abuela",
    "negocios": "empresa mercado inversión dinero trabajo economía éxito carrera oficina líder",
    "moda": "moda ropa estilo tendencia vestido zapatos belleza maquillaje diseño colección",
    "ciencia": "ciencia investigación estudio tecnología universidad datos descubrimiento espacio salud médico",
    "deporte": "fútbol partido equipo gol campeonato jugador torneo estadio entrenador victoria",
    "cocina": "receta cocina plato sabor ingredientes horno postre vino cena restaurante",
}
FILLER = "el la de que y en los las un una por con para del al es muy más"

# Theme weights per source; the first list closes towards the second over time.
START = {
    "brando": {"familia": 1, "negocios": 4, "moda": 1, "ciencia": 3, "deporte": 4, "cocina": 2},
    "ohlala": {"familia": 4, "negocios": 1, "moda": 4, "ciencia": 1, "deporte": 1, "cocina": 3},
}
END = {
    "brando": {"familia": 2, "negocios": 3, "moda": 2, "ciencia": 3, "deporte": 3, "cocina": 2},
    "ohlala": {"familia": 3, "negocios": 2, "moda": 3, "ciencia": 2, "deporte": 1, "cocina": 3},
}


def document(rng, weights, length):
    themes = list(weights)
    chosen = rng.choices(themes, [weights[t] for t in themes], k=2)
    words = []
    for _ in range(length):
        if rng.random() < 0.35:
            words.append(rng.choice(FILLER.split()))
        else:
            words.append(rng.choice(THEMES[rng.choice(chosen)].split()))
    text = " ".join(words)
    return text[0].upper() + text[1:] + "."


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output")
    parser.add_argument("--docs-per-cell", type=int, default=12)
    parser.add_argument("--seed", type=int, default=2018)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    with open(args.output, "w", encoding="utf-8") as out:
        for source in ("brando", "ohlala"):
            for year in range(2008, 2019):
                t = (year - 2008) / 10
                weights = {k: (1 - t) * START[source][k] + t * END[source][k]
                           for k in THEMES}
                for i in range(args.docs_per_cell):
                    record = {
                        "id": f"{source}-{year}-{i:03d}",
                        "source": source,
                        "year": year,
                        "text": document(rng, weights, rng.randint(40, 120)),
                    }
                    out.write(json.dumps(record, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
