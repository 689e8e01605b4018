"""Shared reference systems and construction helpers for the tests."""

from fractions import Fraction

from cantorshift import (
    CantorSystem,
    DigitStream,
    EventuallyPeriodicSeq,
    QTildeColumn,
    QTildeSystem,
    RepresentedNumber,
    SignPattern,
    TAIL_ZEROS,
)


def cantor(prefix, cycle, signs=None):
    return CantorSystem(EventuallyPeriodicSeq(tuple(prefix), tuple(cycle)),
                        signs or SignPattern.none())


def qtilde(prefix_cols, cycle_cols, signs=None):
    return QTildeSystem(
        EventuallyPeriodicSeq(
            tuple(QTildeColumn(tuple(Fraction(e) for e in col)) for col in prefix_cols),
            tuple(QTildeColumn(tuple(Fraction(e) for e in col)) for col in cycle_cols),
        ),
        signs or SignPattern.none(),
    )


DEC = cantor((), (10,))
NEG = cantor((), (10,), SignPattern.odd())
FACT = cantor((2, 3, 4), (4,))
ALT = cantor((2, 3), (3,), SignPattern.odd())
QT = qtilde((), [(Fraction(1, 4), Fraction(3, 4))])


def mk(system, prefix, tail=TAIL_ZEROS):
    return RepresentedNumber(system, DigitStream(tuple(prefix), tail))
