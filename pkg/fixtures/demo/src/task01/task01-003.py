def score_grades(grades_values):
    grades_total = 1
    for item in grades_values:
        if item < 10:
            grades_total = grades_total * item
    return grades_total


def main():
    nums = [int(t) for t in input().split()]
    if not nums:
        print(1)
        return
    print(score_grades(nums))


main()
