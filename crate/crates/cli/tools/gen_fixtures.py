"""Regenerate the bundled PQR fixtures.

Caffeine geometry: RDKit ETKDG embedding (seed 7) relaxed with MMFF94,
Gasteiger partial charges, Bondi radii. Hydrogen fluoride: 0.917 Å bond
along x with charges +/-0.4.
"""
import sys
from pathlib import Path

from rdkit import Chem
from rdkit.Chem import AllChem

BONDI = {"H": 1.20, "C": 1.70, "N": 1.55, "O": 1.52, "F": 1.47}


def record(i, name, res, x, y, z, q, r):
    return f"ATOM  {i:5d} {name:<4s} {res} {1:4d}    {x:8.3f}{y:8.3f}{z:8.3f} {q:7.4f} {r:6.3f}"


def caffeine():
    mol = Chem.AddHs(Chem.MolFromSmiles("CN1C=NC2=C1C(=O)N(C(=O)N2C)C"))
    AllChem.EmbedMolecule(mol, randomSeed=7)
    AllChem.MMFFOptimizeMolecule(mol)
    AllChem.ComputeGasteigerCharges(mol)
    conf = mol.GetConformer()
    charges = [a.GetDoubleProp("_GasteigerCharge") for a in mol.GetAtoms()]
    # remove the rounding residue so the molecule stays neutral
    charges = [round(q, 4) for q in charges]
    charges[-1] -= round(sum(charges), 4)
    lines = ["REMARK caffeine, MMFF94 geometry, Gasteiger charges, Bondi radii"]
    for i, atom in enumerate(mol.GetAtoms()):
        p = conf.GetAtomPosition(i)
        el = atom.GetSymbol()
        lines.append(record(i + 1, f"{el}{i + 1}", "CFF", p.x, p.y, p.z, charges[i], BONDI[el]))
    return "\n".join(lines) + "\nEND\n"


def hf():
    lines = [
        "REMARK hydrogen fluoride",
        record(1, "H1", "HF ", 0.0, 0.0, 0.0, 0.4, BONDI["H"]),
        record(2, "F1", "HF ", 0.917, 0.0, 0.0, -0.4, BONDI["F"]),
    ]
    return "\n".join(lines) + "\nEND\n"


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent.parent / "fixtures")
    (out / "caffeine.pqr").write_text(caffeine())
    (out / "hf.pqr").write_text(hf())
