import pytest

from bruhatkit.errors import IntegrityError
from bruhatkit.partitions import Partition, is_symplectic_partition, partitions_of
from bruhatkit.phimap import UnipotentClassLabel, map_i, map_j, map_j_image, phi, phi_table
from bruhatkit.weyl import GroupSpec, conjugacy_classes


def classes_by_label(spec):
    return {
        (tuple(c.label[0].parts), tuple(c.label[1].parts)): c
        for c in conjugacy_classes(spec)
    }


def test_unipotent_label_validation():
    UnipotentClassLabel("GL", Partition([3, 1]))
    UnipotentClassLabel("Sp", Partition([2, 2]))
    with pytest.raises(ValueError):
        UnipotentClassLabel("Sp", Partition([3, 1]))
    with pytest.raises(ValueError):
        UnipotentClassLabel("Sp", Partition([2, 1]))  # odd size
    with pytest.raises(ValueError):
        UnipotentClassLabel("SO", Partition([2]))


def test_map_i_examples_c2():
    by_label = classes_by_label(GroupSpec("BC", 2))
    assert map_i(by_label[((1, 1), ())]) == Partition([1, 1, 1, 1])
    assert map_i(by_label[((), (2,))]) == Partition([4])
    assert map_i(by_label[((1,), (1,))]) == Partition([2, 1, 1])
    assert map_i(by_label[((2,), ())]) == Partition([2, 2])
    assert map_i(by_label[((), (1, 1))]) == Partition([2, 2])
    with pytest.raises(ValueError):
        map_i(conjugacy_classes(GroupSpec("A", 2))[0])


def test_map_i_constant_on_classes():
    # exhaustive through rank 5: every member embeds to the same cycle type
    for n in range(1, 6):
        for cls in conjugacy_classes(GroupSpec("BC", n)):
            types = {w.embed_in_symmetric().cycle_type() for w in cls.elements}
            assert types == {map_i(cls)}


def test_map_i_shortcut_formula():
    # the embedding doubles positive cycles and doubles negative lengths
    for n in range(1, 6):
        for cls in conjugacy_classes(GroupSpec("BC", n)):
            lam, mu = cls.label
            expected = Partition(list(lam.parts) * 2 + [2 * m for m in mu.parts])
            assert map_i(cls) == expected


def test_map_j():
    assert map_j(UnipotentClassLabel("Sp", Partition([2, 2]))) == Partition([2, 2])
    with pytest.raises(ValueError):
        map_j(UnipotentClassLabel("GL", Partition([2, 2])))
    assert map_j_image(2) == {
        Partition([1, 1, 1, 1]), Partition([2, 1, 1]), Partition([2, 2]), Partition([4])
    }
    assert map_j_image(1) == {Partition([1, 1]), Partition([2])}
    assert Partition([3, 1]) not in map_j_image(2)


def test_images_of_i_and_j_coincide():
    for n in range(1, 7):
        image_i = {map_i(c) for c in conjugacy_classes(GroupSpec("BC", n))}
        assert image_i == map_j_image(n)


def test_phi_type_a_is_identity_on_labels():
    for rank in range(1, 6):
        for cls in conjugacy_classes(GroupSpec("A", rank)):
            label = phi(cls)
            assert label.group_family == "GL"
            assert label.jordan_type == cls.label


def test_phi_sp4_examples():
    by_label = classes_by_label(GroupSpec("BC", 2))
    assert phi(by_label[((), (2,))]).jordan_type == Partition([4])
    assert phi(by_label[((), (1, 1))]).jordan_type == Partition([2, 2])
    assert phi(by_label[((), (2,))]).group_family == "Sp"


def test_phi_rejects_family_d():
    cls = conjugacy_classes(GroupSpec("D", 2))[0]
    with pytest.raises(ValueError):
        phi(cls)


def test_phi_surjective_and_elliptic_injective():
    for n in range(1, 6):
        classes = conjugacy_classes(GroupSpec("BC", n))
        image = {phi(c).jordan_type for c in classes}
        assert image == map_j_image(n)
        elliptic_images = [phi(c).jordan_type for c in classes if c.elliptic]
        assert len(elliptic_images) == len(set(elliptic_images))


def test_phi_table_s3():
    rows = phi_table(GroupSpec("A", 2))
    assert len(rows) == 3
    mapping = {tuple(r.cls.label.parts): tuple(r.image.jordan_type.parts) for r in rows}
    assert mapping == {(1, 1, 1): (1, 1, 1), (2, 1): (2, 1), (3,): (3,)}


def test_phi_table_c2():
    rows = phi_table(GroupSpec("BC", 2))
    assert len(rows) == 5
    images = {tuple(r.image.jordan_type.parts) for r in rows}
    assert images == {tuple(p.parts) for p in map_j_image(2)}
    elliptic_rows = [r for r in rows if r.cls.elliptic]
    assert len(elliptic_rows) == 2
    assert {tuple(r.image.jordan_type.parts) for r in elliptic_rows} == {(4,), (2, 2)}


def test_phi_table_d_handling():
    with pytest.raises(ValueError):
        phi_table(GroupSpec("D", 3))
    rows = phi_table(GroupSpec("D", 3), with_phi=False)
    assert all(r.image is None for r in rows)
    assert all(r.to_json()["phi"] is None for r in rows)


def test_phi_row_json_shape():
    row = phi_table(GroupSpec("BC", 2))[0].to_json()
    assert set(row) == {"class_label", "size", "d_C", "elliptic", "phi"}
    assert row["class_label"] == [[1, 1], []]
    assert row["phi"] == [1, 1, 1, 1]


def test_integrity_error_is_raised_not_swallowed():
    # a class whose "representative" embeds to a non-symplectic cycle type
    # cannot arise from the real embedding; fake one to pin the behavior
    class FakeClass:
        spec = GroupSpec("BC", 2)
        label = (Partition([1]), Partition([1]))

        class representative:
            @staticmethod
            def embed_in_symmetric():
                class P:
                    @staticmethod
                    def cycle_type():
                        return Partition([3, 1])

                return P()

    with pytest.raises(IntegrityError):
        phi(FakeClass())


def test_every_weyl_image_is_symplectic():
    for n in range(1, 7):
        for cls in conjugacy_classes(GroupSpec("BC", n)):
            assert is_symplectic_partition(map_i(cls))
    # while plenty of partitions of 2n are not in the image
    assert any(not is_symplectic_partition(p) for p in partitions_of(6))
