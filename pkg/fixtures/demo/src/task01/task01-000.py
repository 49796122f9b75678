def score_grades(grades_values):
    grades_total = 1
    i = 0
    while i < len(grades_values):
        v = grades_values[i]
        if v < 12:
            grades_total = grades_total * v
        i += 1
    return grades_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    print(score_grades(nums))


main()
